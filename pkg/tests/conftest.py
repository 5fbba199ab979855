import random

import hypothesis.strategies as st
import pytest

from oppositions import And, ExistsPair, ExistsTerm, Not, Or, SignedTerm

signed_terms = st.builds(SignedTerm, st.sampled_from(["A", "B"]), st.booleans())

_atoms = st.one_of(
    st.builds(ExistsTerm, signed_terms),
    st.builds(
        ExistsPair,
        st.builds(SignedTerm, st.just("A"), st.booleans()),
        st.builds(SignedTerm, st.just("B"), st.booleans()),
    ),
)

formulas = st.recursive(
    _atoms,
    lambda child: st.one_of(
        st.builds(Not, child),
        st.builds(And, child, child),
        st.builds(Or, child, child),
    ),
    max_leaves=8,
)


def random_formula(rng: random.Random, depth: int = 3):
    """Plain seeded generator, independent of hypothesis."""
    def term(base):
        return SignedTerm(base, rng.random() < 0.5)

    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.5:
            return ExistsTerm(term(rng.choice("AB")))
        return ExistsPair(term("A"), term("B"))
    kind = rng.choice(("not", "and", "or"))
    if kind == "not":
        return Not(random_formula(rng, depth - 1))
    left = random_formula(rng, depth - 1)
    right = random_formula(rng, depth - 1)
    return And(left, right) if kind == "and" else Or(left, right)


@pytest.fixture(scope="session")
def full16():
    from oppositions import all_models
    return all_models()
