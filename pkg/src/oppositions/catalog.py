"""Named proposition families and square-of-opposition machinery.

The extended family crosses the eight lettered cores with signed existence
claims about each predicate (128 conjunctive forms) and closes the result
under propositional negation, for 256 propositions in all.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from .errors import DuplicateCommitment
from .formula import (
    AFFIRMATIVE_LETTERS,
    And,
    CANONICAL,
    CANONICAL_LETTERS,
    ExistsTerm,
    Formula,
    NEGATION_PAIR,
    Not,
    SignedTerm,
    UNIVERSAL_LETTERS,
    core_letter,
    guarded,
    negate,
    parse_canonical,
    to_text,
)
from .models import ModelUniverse, bitstring
from .relations import Relation, relate


@dataclass(frozen=True)
class Commitment:
    """An import commitment for one signed term: explicit (!) or implicit (?)."""

    term: SignedTerm
    explicit: bool = True

    def __str__(self):
        sign = "" if self.term.positive else "~"
        return f"{sign}{self.term.base}{'!' if self.explicit else '?'}"


def apply_commitments(core: Formula, commitments: Sequence[Commitment]) -> Formula:
    """Guard a core proposition with import commitments.

    Explicit commitments conjoin an existence claim; implicit ones condition
    the core on the guarded terms being instantiated.  At most one commitment
    per predicate.
    """
    seen = set()
    for c in commitments:
        if c.term.base in seen:
            raise DuplicateCommitment(
                f"two commitments target predicate {c.term.base}")
        seen.add(c.term.base)
    explicit = [c.term for c in commitments if c.explicit]
    implicit = [c.term for c in commitments if not c.explicit]
    return guarded(core, explicit, implicit)


def aristotelian_set():
    """The four classical forms [A, E, I, O]."""
    return [CANONICAL[x] for x in ("A", "E", "I", "O")]


def keynesian_set():
    """The four complementary forms [A', E', I', O']."""
    return [CANONICAL[x] for x in ("A'", "E'", "I'", "O'")]


# --------------------------------------------------------------------------
# The 256-proposition family

#: Signed existence claims about one predicate, in a fixed order:
#: (claim affirmed?, term sign positive?).
_GUARD_SHAPES = ((True, True), (True, False), (False, True), (False, False))


@dataclass(frozen=True)
class Guard:
    """One conjunct ``±ex(±P)`` of an extended proposition."""

    affirmed: bool
    term: SignedTerm

    def formula(self) -> Formula:
        claim = ExistsTerm(self.term)
        return claim if self.affirmed else Not(claim)


@dataclass(frozen=True)
class ExtendedProposition:
    """A lettered core with per-predicate existence conjuncts, maybe negated."""

    core: str
    a_guard: Guard
    b_guard: Guard
    negated: bool
    formula: Formula

    @property
    def name(self) -> Optional[str]:
        """Commitment-grammar name, when one exists.

        Members whose guards are affirmed existence claims read as explicit
        commitments (``I[A!,B!]``); their negations read as the implicit-guard
        form of the opposite letter (``E[A?,B?]``).  Members with denied
        existence conjuncts have no name in the grammar.
        """
        if not (self.a_guard.affirmed and self.b_guard.affirmed):
            return None
        marks = [f"{'' if g.term.positive else '~'}{g.term.base}" for g in
                 (self.a_guard, self.b_guard)]
        if self.negated:
            letter = NEGATION_PAIR[self.core]
            return f"{letter}[{marks[0]}?,{marks[1]}?]"
        return f"{self.core}[{marks[0]}!,{marks[1]}!]"

    def text(self) -> str:
        return to_text(self.formula)


def family_256() -> Tuple[ExtendedProposition, ...]:
    """All 128 conjunctive extended forms plus their 128 negations."""
    base = []
    for letter in CANONICAL_LETTERS:
        core = CANONICAL[letter]
        for affirmed_a, positive_a in _GUARD_SHAPES:
            for affirmed_b, positive_b in _GUARD_SHAPES:
                ga = Guard(affirmed_a, SignedTerm("A", positive_a))
                gb = Guard(affirmed_b, SignedTerm("B", positive_b))
                f = And(ga.formula(), And(gb.formula(), core))
                base.append(ExtendedProposition(letter, ga, gb, False, f))
    negs = [
        ExtendedProposition(p.core, p.a_guard, p.b_guard, True, negate(p.formula))
        for p in base
    ]
    return tuple(base + negs)


def chatti_set() -> Dict[str, Formula]:
    """Every single-commitment guarded form, keyed by its name."""
    out = {}
    for letter in CANONICAL_LETTERS:
        for base in ("A", "B"):
            for sign in ("", "~"):
                for mode in ("!", "?"):
                    name = f"{letter}[{sign}{base}{mode}]"
                    out[name] = parse_canonical(name)
    return out


# --------------------------------------------------------------------------
# Squares of opposition

@dataclass
class SquareReport:
    """The six relation checks for a candidate square (U1, U2, P1, P2)."""

    u1: Formula
    u2: Formula
    p1: Formula
    p2: Formula
    checks: Dict[str, bool] = field(default_factory=dict)
    valid: bool = False


def is_valid_square(u1: Formula, u2: Formula, p1: Formula, p2: Formula,
                    universe: ModelUniverse) -> SquareReport:
    """Check the six square relations over ``universe``.

    Degenerate bitstrings fail every check by construction.
    """
    bu1, bu2 = bitstring(u1, universe), bitstring(u2, universe)
    bp1, bp2 = bitstring(p1, universe), bitstring(p2, universe)
    checks = {
        "contrary(U1,U2)": relate(bu1, bu2) is Relation.CONTRARY,
        "contradictory(U1,P2)": relate(bu1, bp2) is Relation.CONTRADICTORY,
        "contradictory(U2,P1)": relate(bu2, bp1) is Relation.CONTRADICTORY,
        "subcontrary(P1,P2)": relate(bp1, bp2) is Relation.SUBCONTRARY,
        "subaltern(U1,P1)": relate(bu1, bp1) is Relation.SUBALTERNATION,
        "subaltern(U2,P2)": relate(bu2, bp2) is Relation.SUBALTERNATION,
    }
    return SquareReport(u1, u2, p1, p2, checks, all(checks.values()))


#: The named guarded squares: three with affirmative import about A, three
#: complementary ones with import about not-A.
NAMED_SQUARES = {
    "S1": ("A[A!]", "E[A!]", "I[A?]", "O[A?]"),
    "S2": ("A[A!]", "E[A?]", "I[A!]", "O[A?]"),
    "S3": ("A[A?]", "E[A!]", "I[A?]", "O[A!]"),
    "S1c": ("A'[~A!]", "E'[~A!]", "I'[~A?]", "O'[~A?]"),
    "S2c": ("A'[~A!]", "E'[~A?]", "I'[~A!]", "O'[~A?]"),
    "S3c": ("A'[~A?]", "E'[~A!]", "I'[~A?]", "O'[~A!]"),
}


def named_square(name: str) -> Tuple[Formula, Formula, Formula, Formula]:
    return tuple(parse_canonical(n) for n in NAMED_SQUARES[name])


def enumerate_squares(pool, universe: ModelUniverse):
    """All valid squares from ``pool``, deduplicated by bitstring quadruple.

    Pool entries may be formulas or ExtendedPropositions.  A proper square
    puts an affirmative universal at U1 and a negative universal at U2; P1
    and P2 are the pool members contradicting U2 and U1.  Corners are typed
    by their core letter, so entries without a recognizable core never serve
    as universals (though they may still witness the particulars).
    """
    forms = [p.formula if isinstance(p, ExtendedProposition) else p for p in pool]
    letters = [core_letter(f) for f in forms]
    profiles = [bitstring(f, universe) for f in forms]
    by_profile = {}
    for k, b in enumerate(profiles):
        by_profile.setdefault(str(b), []).append(k)
    u1_pool = [k for k, l in enumerate(letters)
               if l in UNIVERSAL_LETTERS and l in AFFIRMATIVE_LETTERS]
    u2_pool = [k for k, l in enumerate(letters)
               if l in UNIVERSAL_LETTERS and l not in AFFIRMATIVE_LETTERS]
    seen = set()
    reports = []
    for i in u1_pool:
        for j in u2_pool:
            if relate(profiles[i], profiles[j]) is not Relation.CONTRARY:
                continue
            key = (str(profiles[i]), str(profiles[j]))
            if key in seen:
                continue
            p2_hits = by_profile.get(str(~profiles[i]))
            p1_hits = by_profile.get(str(~profiles[j]))
            if not p2_hits or not p1_hits:
                continue
            report = is_valid_square(forms[i], forms[j],
                                     forms[p1_hits[0]], forms[p2_hits[0]],
                                     universe)
            if report.valid:
                seen.add(key)
                reports.append(report)
    return reports
