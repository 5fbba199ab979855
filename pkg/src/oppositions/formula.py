"""Formula language for categorical propositions over two predicates A and B.

Formulas are closed Boolean combinations of signed existential claims.  Two
concrete syntaxes are supported: a small FOL-style DSL (``not ex(A & ~B)``,
with ``not``/``&``/``|``/``->`` connectives) and the compact term-logic
notation (``+(+A+B)``), which is restricted to the classical lettered forms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .errors import (
    DuplicateCommitment,
    NotRepresentable,
    ParseError,
    Unclassifiable,
    UnknownName,
    UnsupportedForm,
)

PREDICATES = ("A", "B")


@dataclass(frozen=True)
class SignedTerm:
    """A predicate letter with a term-negation sign.

    ``~A`` ("not-A") is a negated term, which is not the same thing as the
    propositional negation of a claim about A.
    """

    base: str
    positive: bool = True

    def __post_init__(self):
        if self.base not in PREDICATES:
            raise ValueError(f"unknown predicate {self.base!r}; expected one of {PREDICATES}")

    def negated(self) -> "SignedTerm":
        return SignedTerm(self.base, not self.positive)

    def __str__(self):
        return self.base if self.positive else "~" + self.base


def signed_term(spec) -> SignedTerm:
    """Coerce ``"A"``, ``"~A"``, ``"-B"`` or a SignedTerm to a SignedTerm."""
    if isinstance(spec, SignedTerm):
        return spec
    s = str(spec).strip()
    negative = s[:1] in ("~", "-")
    if negative:
        s = s[1:].strip()
    return SignedTerm(s, not negative)


@dataclass(frozen=True)
class ExistsTerm:
    """Something satisfies the signed term: ``ex(~A)`` is "something is not-A"."""

    term: SignedTerm


@dataclass(frozen=True)
class ExistsPair:
    """Something lies in one Venn region: ``ex(A & ~B)``."""

    a: SignedTerm
    b: SignedTerm

    def __post_init__(self):
        if self.a.base != "A" or self.b.base != "B":
            raise ValueError("a pair atom combines one A-literal with one B-literal")


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


Formula = Union[ExistsTerm, ExistsPair, Not, And, Or]

_POS_A = SignedTerm("A")
_NEG_A = SignedTerm("A", False)
_POS_B = SignedTerm("B")
_NEG_B = SignedTerm("B", False)

#: The eight lettered forms.  Universals are negated existentials; primes mark
#: the complementary (negated-subject) family.
CANONICAL = {
    "A": Not(ExistsPair(_POS_A, _NEG_B)),
    "E": Not(ExistsPair(_POS_A, _POS_B)),
    "I": ExistsPair(_POS_A, _POS_B),
    "O": ExistsPair(_POS_A, _NEG_B),
    "A'": Not(ExistsPair(_NEG_A, _POS_B)),
    "E'": Not(ExistsPair(_NEG_A, _NEG_B)),
    "I'": ExistsPair(_NEG_A, _NEG_B),
    "O'": ExistsPair(_NEG_A, _POS_B),
}

CANONICAL_LETTERS = tuple(CANONICAL)

#: Letter pairs swapped by propositional negation.
NEGATION_PAIR = {
    "A": "O", "O": "A", "E": "I", "I": "E",
    "A'": "O'", "O'": "A'", "E'": "I'", "I'": "E'",
}


def letter_of(f: Formula) -> Optional[str]:
    """The canonical letter of ``f``, or None if it is not a lettered form."""
    for letter, g in CANONICAL.items():
        if f == g:
            return letter
    return None


#: Letters whose form is a negated existential ("every ..." readings).
UNIVERSAL_LETTERS = frozenset({"A", "E", "A'", "E'"})
#: Letters affirming their predicate of the subject.
AFFIRMATIVE_LETTERS = frozenset({"A", "I", "A'", "I'"})


def core_letter(f: Formula) -> Optional[str]:
    """The lettered core under any guards and negations, or None.

    Guard conjuncts attach on the left, so the core sits down the right
    spine; propositional negation flips the letter to its negation pair.
    """
    letter = letter_of(f)
    if letter is not None:
        return letter
    if isinstance(f, And):
        return core_letter(f.right)
    if isinstance(f, Not):
        inner = core_letter(f.body)
        return NEGATION_PAIR[inner] if inner is not None else None
    return None


def negate(f: Formula) -> Formula:
    """Propositional negation, with double negation eliminated at the root."""
    if isinstance(f, Not):
        return f.body
    return Not(f)


def conjoin(fs: Iterable[Formula]) -> Formula:
    fs = list(fs)
    if not fs:
        raise ValueError("cannot conjoin zero formulas")
    out = fs[0]
    for f in fs[1:]:
        out = And(out, f)
    return out


def guarded(core: Formula, explicit=(), implicit=()) -> Formula:
    """Attach existence guards for signed terms to a core proposition.

    Explicit guards become conjuncts ``ex(P) & core``; implicit guards are
    gathered into a single antecedent, ``not (ex(P) & not core)``, i.e. the
    core is only claimed on condition that the guarded terms are instantiated.
    """
    f = core
    implicit = tuple(implicit)
    if implicit:
        antecedent = conjoin(ExistsTerm(t) for t in implicit)
        f = Not(And(antecedent, negate(core)))
    for t in reversed(tuple(explicit)):
        f = And(ExistsTerm(t), f)
    return f


# --------------------------------------------------------------------------
# FOL-style DSL
#
# formula := or ('->' formula)?          implication is right-associative
# or      := and ('|' and)*
# and     := unary ('&' unary)*
# unary   := 'not' unary | atom
# atom    := 'ex' '(' term ('&' term)? ')' | '(' formula ')'
# term    := '~'? ('A' | 'B')

_TOKEN_RE = re.compile(r"(->|[()&|~])|([A-Za-z]+)|(\S)")
_MODAL_WORDS = frozenset({"necessarily", "possibly"})
_KEYWORDS = frozenset({"ex", "not", "A", "B"})


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        sym, word, junk = m.groups()
        if junk is not None:
            raise ParseError(f"unexpected character {junk!r}", position=pos)
        tok = sym or word
        if word is not None and word not in _KEYWORDS:
            if word.lower() in _MODAL_WORDS:
                raise UnsupportedForm(
                    f"modal operator {word!r} is recognized but not compiled"
                )
            raise ParseError(f"unknown word {word!r}", position=pos,
                             expected=sorted(_KEYWORDS))
        tokens.append((tok, pos))
        pos = m.end()
    return tokens


class _DslParser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, expected=None):
        if self.i >= len(self.tokens):
            raise ParseError("unexpected end of input", position=len(self.text),
                             expected=(expected,) if expected else ())
        tok, pos = self.tokens[self.i]
        if expected is not None and tok != expected:
            raise ParseError(f"unexpected {tok!r}", position=pos, expected=(expected,))
        self.i += 1
        return tok, pos

    def parse(self):
        f = self.formula()
        if self.i < len(self.tokens):
            tok, pos = self.tokens[self.i]
            raise ParseError(f"unexpected {tok!r}", position=pos,
                             expected=("end of input",))
        return f

    def formula(self):
        left = self.disjunction()
        if self.peek() == "->":
            self.take()
            right = self.formula()
            # implication is sugar for `not p | q`
            return Or(negate(left), right)
        return left

    def disjunction(self):
        f = self.conjunction()
        while self.peek() == "|":
            self.take()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self):
        f = self.unary()
        while self.peek() == "&":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self):
        if self.peek() == "not":
            self.take()
            return Not(self.unary())
        return self.atom()

    def atom(self):
        tok = self.peek()
        if tok == "ex":
            self.take()
            self.take("(")
            first = self.term()
            second = None
            if self.peek() == "&":
                self.take()
                second = self.term()
            _, close_pos = self.take(")")
            if second is None:
                return ExistsTerm(first)
            if first.base == second.base:
                raise ParseError(
                    "a pair atom needs one A-literal and one B-literal",
                    position=close_pos)
            a, b = (first, second) if first.base == "A" else (second, first)
            return ExistsPair(a, b)
        if tok == "(":
            self.take()
            f = self.formula()
            self.take(")")
            return f
        pos = self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)
        raise ParseError(f"unexpected {tok!r}" if tok else "unexpected end of input",
                         position=pos, expected=("ex", "(", "not"))

    def term(self):
        positive = True
        if self.peek() == "~":
            self.take()
            positive = False
        tok, pos = self.take()
        if tok not in PREDICATES:
            raise ParseError(f"unexpected {tok!r}", position=pos, expected=PREDICATES)
        return SignedTerm(tok, positive)


# --------------------------------------------------------------------------
# Term-logic notation.  Only the lettered forms have fixed strings; the
# primed-A form has no agreed rendering (its printed string collides with E)
# and is therefore undefined in this syntax.

_TL_STRINGS = {
    "A": "-(+A-(+B))",
    "E": "-(+A+B)",
    "I": "+(+A+B)",
    "O": "+(+A+(-B))",
    "E'": "-(-A+(-B))",
    "I'": "+(-A+(-B))",
    "O'": "+(-A+B)",
}
_TL_TO_LETTER = {v: k for k, v in _TL_STRINGS.items()}


def _tl_key(s):
    # tolerate a single stray trailing parenthesis
    if s.endswith(")") and s.count(")") == s.count("(") + 1:
        s = s[:-1]
    return s


def _parse_tl(text):
    s = re.sub(r"\s+", "", text)
    negated = False
    if len(s) > 3 and s[0] in "+-" and s[1] == "(" and s.endswith(")") \
            and _tl_key(s[2:-1]) in _TL_TO_LETTER:
        # optional outer sign around a complete lettered string
        negated = s[0] == "-"
        s = s[2:-1]
    key = _tl_key(s)
    if key not in _TL_TO_LETTER:
        raise ParseError(f"not a recognized term-logic form: {text!r}", position=0,
                         expected=sorted(_TL_STRINGS.values()))
    f = CANONICAL[_TL_TO_LETTER[key]]
    return negate(f) if negated else f


def parse_formula(text: str, syntax: str = "fol-dsl") -> Formula:
    """Parse ``text`` in the given syntax (``fol-dsl`` or ``tl``)."""
    if not text or not text.strip():
        raise ParseError("empty input", position=0, expected=("formula",))
    if syntax == "tl":
        return _parse_tl(text)
    if syntax != "fol-dsl":
        raise ValueError(f"unknown syntax {syntax!r}")
    return _DslParser(text).parse()


# --------------------------------------------------------------------------
# Printing

def _dsl(f) -> str:
    if isinstance(f, ExistsTerm):
        return f"ex({f.term})"
    if isinstance(f, ExistsPair):
        return f"ex({f.a} & {f.b})"
    if isinstance(f, Not):
        body = _dsl(f.body)
        if isinstance(f.body, (And, Or)):
            return f"not ({body})"
        return f"not {body}"
    if isinstance(f, And):
        left = _paren(f.left, (Or,))
        right = _paren(f.right, (Or, And))
        return f"{left} & {right}"
    if isinstance(f, Or):
        left = _dsl(f.left)
        right = _paren(f.right, (Or,))
        return f"{left} | {right}"
    raise NotRepresentable(f"cannot print node {type(f).__name__}")


def _paren(f, wrap_kinds):
    s = _dsl(f)
    return f"({s})" if isinstance(f, wrap_kinds) else s


def to_text(f: Formula, syntax: str = "fol-dsl") -> str:
    """Render ``f``; inverse of :func:`parse_formula` for the DSL syntax."""
    if syntax == "fol-dsl":
        return _dsl(f)
    if syntax != "tl":
        raise ValueError(f"unknown syntax {syntax!r}")
    letter = letter_of(f)
    if letter is None or letter not in _TL_STRINGS:
        raise NotRepresentable(
            "term-logic notation is only defined for the lettered forms")
    return _TL_STRINGS[letter]


# --------------------------------------------------------------------------
# Proposition names: LETTER [ '[' commitment {',' commitment} ']' ]
# with commitment = '~'? ('A'|'B') ('!'|'?'), e.g. A[A!], I[~A?], A[A!,B?].

_NAME_RE = re.compile(r"^([AEIO])(')?(?:\[([^\[\]]*)\])?$")
_COMMIT_RE = re.compile(r"^(~?)([AB])([!?])$")


def parse_canonical(name: str) -> Formula:
    """Build the formula named by a letter plus optional import commitments."""
    text = name.strip().replace("′", "'")
    m = _NAME_RE.match(text)
    if not m:
        raise UnknownName(f"unknown proposition name {name!r}")
    letter = m.group(1) + (m.group(2) or "")
    core = CANONICAL[letter]
    commitments = m.group(3)
    if commitments is None:
        return core
    explicit, implicit, seen = [], [], set()
    for part in commitments.split(","):
        cm = _COMMIT_RE.match(part.strip())
        if not cm:
            raise UnknownName(f"bad commitment {part.strip()!r} in {name!r}")
        term = SignedTerm(cm.group(2), cm.group(1) != "~")
        if term.base in seen:
            raise DuplicateCommitment(
                f"two commitments target predicate {term.base} in {name!r}")
        seen.add(term.base)
        (explicit if cm.group(3) == "!" else implicit).append(term)
    return guarded(core, explicit, implicit)


def parse_any(text: str) -> Formula:
    """Parse a proposition name if ``text`` looks like one, else DSL text."""
    try:
        return parse_canonical(text)
    except UnknownName:
        return parse_formula(text, "fol-dsl")


# --------------------------------------------------------------------------
# Form classification

@dataclass(frozen=True)
class FormClass:
    type_index: int
    literal_count: int


def _is_core(f) -> bool:
    g = f.body if isinstance(f, Not) else f
    return isinstance(g, ExistsPair)


def _flatten_and(f):
    if isinstance(f, And):
        return _flatten_and(f.left) + _flatten_and(f.right)
    return [f]


def _is_signed_exists(f, base) -> bool:
    g = f.body if isinstance(f, Not) else f
    return isinstance(g, ExistsTerm) and g.term.base == base


def classify_type(f: Formula) -> FormClass:
    """Classify ``f`` against the recognized proposition schemes.

    The lettered forms and everything of the shape ``±ex(±A & ±B)`` count as
    the standard four-literal categorical scheme; three-conjunct forms that
    prefix it with signed existence claims about A and B count as the
    extended seven-literal scheme.
    """
    if _is_core(f):
        return FormClass(4, 4)
    conjuncts = _flatten_and(f)
    if (len(conjuncts) == 3
            and _is_signed_exists(conjuncts[0], "A")
            and _is_signed_exists(conjuncts[1], "B")
            and _is_core(conjuncts[2])):
        return FormClass(4, 7)
    raise Unclassifiable(f"{to_text(f)!r} fits no recognized scheme")
