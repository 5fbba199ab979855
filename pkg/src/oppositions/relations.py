"""Classification of logical relations between bitstrings.

With bitstrings in hand, every classical opposition reduces to a bitwise
test: incompatibility is an empty conjunction, entailment is bit inclusion,
contradiction is exact complementation.  All-true and all-false profiles get
their own ``degenerate`` kind because the classical taxonomy misbehaves on
them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .errors import EmptyUniverse, NotCellConstant
from .formula import ExistsTerm, Formula, negate, parse_canonical, signed_term
from .models import Bitstring, ModelUniverse, bitstring, evaluate


class Relation(str, enum.Enum):
    EQUIVALENT = "equivalent"
    CONTRADICTORY = "contradictory"
    CONTRARY = "contrary"
    SUBCONTRARY = "subcontrary"
    SUBALTERNATION = "subalternation"
    SUPERALTERNATION = "superalternation"
    UNCONNECTED = "unconnected"
    DEGENERATE = "degenerate"

    def __str__(self):
        return self.value


def relate(b1: Bitstring, b2: Bitstring) -> Relation:
    """The unique relation between two equal-length bitstrings."""
    b1._check(b2)
    if len(b1) == 0:
        return Relation.DEGENERATE
    if b1 == b2:
        return Relation.EQUIVALENT
    if b1.all_ones or b1.all_zeros or b2.all_ones or b2.all_zeros:
        return Relation.DEGENERATE
    both = b1 & b2
    either = b1 | b2
    if both.all_zeros:
        return Relation.CONTRADICTORY if either.all_ones else Relation.CONTRARY
    if either.all_ones:
        return Relation.SUBCONTRARY
    if both == b1:
        return Relation.SUBALTERNATION
    if both == b2:
        return Relation.SUPERALTERNATION
    return Relation.UNCONNECTED


_CONVERSE = {
    Relation.SUBALTERNATION: Relation.SUPERALTERNATION,
    Relation.SUPERALTERNATION: Relation.SUBALTERNATION,
}


def converse(r: Relation) -> Relation:
    return _CONVERSE.get(r, r)


def entails(b1: Bitstring, b2: Bitstring) -> bool:
    """Every 1-bit of ``b1`` is a 1-bit of ``b2``."""
    return (b1 & b2) == b1


def incompatible(b1: Bitstring, b2: Bitstring) -> bool:
    """No model satisfies both."""
    return (b1 & b2).all_zeros


# --------------------------------------------------------------------------
# Signature partitions

@dataclass(frozen=True)
class Partition:
    """Disjoint, exhaustive grouping of a universe by joint truth values."""

    universe: ModelUniverse
    cells: Tuple[Tuple, ...]
    anchors: Optional[Tuple[Formula, ...]] = None


def signature_partition(formulas: Sequence[Formula], universe: ModelUniverse,
                        anchors: Optional[Sequence[Formula]] = None) -> Partition:
    """Group models by the truth-value signature of ``formulas``.

    Cells are ordered by first-occurring model, or by ``anchors`` when given:
    each anchor formula must be all-true on exactly one cell.
    """
    if len(universe) == 0:
        raise EmptyUniverse("cannot partition an empty universe")
    groups = {}
    order = []
    for m in universe:
        sig = tuple(evaluate(f, m) for f in formulas)
        if sig not in groups:
            groups[sig] = []
            order.append(sig)
        groups[sig].append(m)
    cells = [tuple(groups[sig]) for sig in order]
    if anchors is None:
        return Partition(universe, tuple(cells))
    if len(anchors) != len(cells):
        raise ValueError(
            f"{len(anchors)} anchors given for {len(cells)} cells")
    ordered = []
    used = set()
    for anchor in anchors:
        hits = [k for k, cell in enumerate(cells)
                if k not in used and all(evaluate(anchor, m) for m in cell)]
        if len(hits) != 1:
            raise ValueError("anchor does not pick out a unique cell")
        used.add(hits[0])
        ordered.append(cells[hits[0]])
    return Partition(universe, tuple(ordered), tuple(anchors))


def partition_bitstring(f: Formula, p: Partition) -> Bitstring:
    """One bit per cell; ``f`` must be constant on every cell."""
    bits = []
    for cell in p.cells:
        values = {evaluate(f, m) for m in cell}
        if len(values) != 1:
            raise NotCellConstant("formula is not constant on a partition cell")
        bits.append(values.pop())
    return Bitstring(tuple(bits))


def relation_table(formulas: Sequence[Formula], universe: ModelUniverse):
    """Full ordered-pair relation matrix over ``universe``."""
    if len(universe) == 0:
        raise EmptyUniverse("cannot relate formulas over an empty universe")
    profiles = [bitstring(f, universe) for f in formulas]
    return [[relate(b1, b2) for b2 in profiles] for b1 in profiles]


def has_import(f: Formula, term, universe: ModelUniverse) -> bool:
    """Does ``f`` entail the existence of the signed term over ``universe``?"""
    claim = ExistsTerm(signed_term(term))
    return entails(bitstring(f, universe), bitstring(claim, universe))


# --------------------------------------------------------------------------
# Sequent checking

@dataclass(frozen=True)
class Sequent:
    label: str
    lhs: Formula
    rhs: Formula
    kind: str = "entails"  # "entails" | "incompatible"


@dataclass(frozen=True)
class SequentReport:
    sequent: Sequent
    holds: bool
    countermodels: Tuple


def sequent(text: str) -> Sequent:
    """Build a sequent from text like ``"A |- ~E"`` or ``"A _|_ E"``.

    Sides are proposition names, optionally prefixed with ``~`` for
    propositional negation.
    """
    if "_|_" in text:
        kind, sep = "incompatible", "_|_"
    elif "|-" in text:
        kind, sep = "entails", "|-"
    else:
        raise ValueError(f"no |- or _|_ in sequent {text!r}")
    left, right = (side.strip() for side in text.split(sep, 1))
    return Sequent(text.strip(), _side(left), _side(right), kind)


def _side(name):
    if name.startswith("~"):
        return negate(parse_canonical(name[1:].strip()))
    return parse_canonical(name)


def verify_sequents(sequents: Sequence[Sequent], universe: ModelUniverse):
    """Check each sequent semantically, collecting countermodels."""
    reports = []
    for s in sequents:
        lhs = bitstring(s.lhs, universe)
        rhs = bitstring(s.rhs, universe)
        if s.kind == "entails":
            bad = tuple(m for m, x, y in zip(universe, lhs.bits, rhs.bits)
                        if x and not y)
        else:
            bad = tuple(m for m, x, y in zip(universe, lhs.bits, rhs.bits)
                        if x and y)
        reports.append(SequentReport(s, not bad, bad))
    return reports


_ARISTOTELIAN = (
    "A |- ~E", "A |- ~O", "~A |- O", "A |- I",
    "E |- ~A", "E |- ~I", "~E |- I", "E |- O",
    "I |- ~E", "~I |- ~A", "~I |- E", "~I |- O",
    "O |- ~A", "~O |- I",
)

ARISTOTELIAN_SEQUENTS = tuple(sequent(s) for s in _ARISTOTELIAN)
KEYNESIAN_SEQUENTS = tuple(
    sequent(s.replace("A", "A'").replace("E", "E'")
             .replace("I", "I'").replace("O", "O'"))
    for s in _ARISTOTELIAN
)
