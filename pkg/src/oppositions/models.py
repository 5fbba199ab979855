"""Region models, valuation, bitstring compilation, and the finite oracle.

A region model records which of the four Venn regions of two predicates is
inhabited.  There are sixteen such models; their fixed order gives every
formula a sixteen-bit truth profile.  A separate, deliberately naive
evaluator quantifies over explicit finite domains and serves as an
independent oracle for the region semantics.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from .errors import LengthMismatch, UnsupportedForm
from .formula import (
    And,
    ExistsPair,
    ExistsTerm,
    Formula,
    Not,
    Or,
    SignedTerm,
    signed_term,
)


class Region(enum.IntEnum):
    """The four Venn regions of predicates A and B."""

    R1 = 1  # A and B
    R2 = 2  # A and not-B
    R3 = 3  # not-A and B
    R4 = 4  # not-A and not-B


RegionModel = FrozenSet[Region]

_PAIR_REGION = {
    (True, True): Region.R1,
    (True, False): Region.R2,
    (False, True): Region.R3,
    (False, False): Region.R4,
}


def term_regions(t: SignedTerm) -> FrozenSet[Region]:
    """The regions whose members satisfy the signed term."""
    if t.base == "A":
        picked = (Region.R1, Region.R2) if t.positive else (Region.R3, Region.R4)
    else:
        picked = (Region.R1, Region.R3) if t.positive else (Region.R2, Region.R4)
    return frozenset(picked)


def pair_region(a: SignedTerm, b: SignedTerm) -> Region:
    return _PAIR_REGION[(a.positive, b.positive)]


# Fixed model order; bit k of any bitstring over the full universe refers to
# the k-th entry here.
_MODEL_ORDER = (
    (1, 2, 3, 4),
    (1, 2, 3),
    (1, 2, 4),
    (1, 3, 4),
    (2, 3, 4),
    (1, 2),
    (1, 3),
    (2, 3),
    (1, 4),
    (2, 4),
    (3, 4),
    (1,),
    (2,),
    (3,),
    (4,),
    (),
)

ALL_MODELS: Tuple[RegionModel, ...] = tuple(
    frozenset(Region(i) for i in spec) for spec in _MODEL_ORDER
)

MODEL_NAME = {m: f"w{k + 1}" for k, m in enumerate(ALL_MODELS)}
MODEL_BY_NAME = {name: m for m, name in MODEL_NAME.items()}


@dataclass(frozen=True)
class ModelUniverse:
    """An ordered sequence of distinct region models."""

    models: Tuple[RegionModel, ...]

    def __post_init__(self):
        if len(set(self.models)) != len(self.models):
            raise ValueError("duplicate models in universe")

    def __len__(self):
        return len(self.models)

    def __iter__(self):
        return iter(self.models)

    def __getitem__(self, k):
        return self.models[k]

    def names(self):
        return [MODEL_NAME[m] for m in self.models]


def all_models() -> ModelUniverse:
    """The sixteen region models in their fixed order."""
    return ModelUniverse(ALL_MODELS)


def evaluate(f: Formula, model: RegionModel) -> bool:
    """Truth of ``f`` in a region model."""
    if isinstance(f, ExistsPair):
        return pair_region(f.a, f.b) in model
    if isinstance(f, ExistsTerm):
        return bool(term_regions(f.term) & model)
    if isinstance(f, Not):
        return not evaluate(f.body, model)
    if isinstance(f, And):
        return evaluate(f.left, model) and evaluate(f.right, model)
    if isinstance(f, Or):
        return evaluate(f.left, model) or evaluate(f.right, model)
    raise UnsupportedForm(f"cannot evaluate node {type(f).__name__}")


@dataclass(frozen=True)
class Bitstring:
    """Truth profile of a formula across an ordered model universe."""

    bits: Tuple[bool, ...]

    def __str__(self):
        return "".join("1" if b else "0" for b in self.bits)

    def __len__(self):
        return len(self.bits)

    def _check(self, other):
        if len(self.bits) != len(other.bits):
            raise LengthMismatch(
                f"bitstring lengths differ: {len(self.bits)} vs {len(other.bits)}")

    def __and__(self, other):
        self._check(other)
        return Bitstring(tuple(a and b for a, b in zip(self.bits, other.bits)))

    def __or__(self, other):
        self._check(other)
        return Bitstring(tuple(a or b for a, b in zip(self.bits, other.bits)))

    def __invert__(self):
        return Bitstring(tuple(not b for b in self.bits))

    @property
    def all_ones(self):
        return all(self.bits)

    @property
    def all_zeros(self):
        return not any(self.bits)


def bitstring(f: Formula, universe: ModelUniverse) -> Bitstring:
    """Compile ``f`` to its truth profile over ``universe``."""
    return Bitstring(tuple(evaluate(f, m) for m in universe))


# --------------------------------------------------------------------------
# Universe restriction

@dataclass(frozen=True)
class Constraint:
    """Keep only models where a signed term is (non)instantiated."""

    kind: str  # "nonempty" | "empty"
    term: SignedTerm

    def __post_init__(self):
        if self.kind not in ("nonempty", "empty"):
            raise ValueError(f"unknown constraint kind {self.kind!r}")

    def __str__(self):
        return f"{self.kind}:{self.term}"


def nonempty(term) -> Constraint:
    return Constraint("nonempty", signed_term(term))


def empty(term) -> Constraint:
    return Constraint("empty", signed_term(term))


def full(term) -> Constraint:
    """Everything is P, i.e. nothing is not-P."""
    return Constraint("empty", signed_term(term).negated())


def satisfies(model: RegionModel, constraint: Constraint) -> bool:
    inhabited = bool(term_regions(constraint.term) & model)
    return inhabited if constraint.kind == "nonempty" else not inhabited


def restrict(universe: ModelUniverse, constraints: Iterable[Constraint]) -> ModelUniverse:
    """Drop models violating any constraint; order is preserved."""
    constraints = tuple(constraints)
    kept = tuple(m for m in universe if all(satisfies(m, c) for c in constraints))
    return ModelUniverse(kept)


def normal_universe() -> ModelUniverse:
    """Models where all four signed terms are instantiated (seven of them)."""
    return restrict(all_models(), [
        nonempty("A"), nonempty("~A"), nonempty("B"), nonempty("~B"),
    ])


# --------------------------------------------------------------------------
# Finite-domain oracle

@dataclass(frozen=True)
class FiniteUniverse:
    """An explicit domain: element k lives in region ``assignment[k]``."""

    assignment: Tuple[Region, ...]

    @property
    def size(self):
        return len(self.assignment)


def enumerate_universes(max_size: int = 4):
    """All finite universes with domain size 0..max_size."""
    if max_size < 0:
        raise ValueError("max_size must be >= 0")
    out = []
    for size in range(max_size + 1):
        for combo in itertools.product(tuple(Region), repeat=size):
            out.append(FiniteUniverse(combo))
    return out


def regions_of(fu: FiniteUniverse) -> RegionModel:
    """The region model realized by a finite universe."""
    return frozenset(fu.assignment)


def evaluate_direct(f: Formula, fu: FiniteUniverse) -> bool:
    """Truth of ``f`` by quantifying over the explicit domain.

    Independent of :func:`evaluate`; the two must agree through
    :func:`regions_of` on every formula.
    """
    if isinstance(f, ExistsTerm):
        allowed = term_regions(f.term)
        return any(r in allowed for r in fu.assignment)
    if isinstance(f, ExistsPair):
        target = pair_region(f.a, f.b)
        return any(r == target for r in fu.assignment)
    if isinstance(f, Not):
        return not evaluate_direct(f.body, fu)
    if isinstance(f, And):
        return evaluate_direct(f.left, fu) and evaluate_direct(f.right, fu)
    if isinstance(f, Or):
        return evaluate_direct(f.left, fu) or evaluate_direct(f.right, fu)
    raise UnsupportedForm(f"cannot evaluate node {type(f).__name__}")
