import pytest
from hypothesis import given

from oppositions import (
    ALL_MODELS,
    Bitstring,
    CANONICAL,
    FiniteUniverse,
    LengthMismatch,
    MODEL_NAME,
    ModelUniverse,
    Region,
    all_models,
    bitstring,
    empty,
    enumerate_universes,
    evaluate,
    evaluate_direct,
    full,
    nonempty,
    parse_canonical,
    parse_formula,
    regions_of,
    restrict,
)
from conftest import formulas


class TestModelOrder:
    def test_sixteen_models(self):
        assert len(all_models()) == 16

    def test_first_and_last(self):
        u = all_models()
        assert u[0] == frozenset(Region)
        assert u[15] == frozenset()

    def test_w10_reading(self):
        assert ALL_MODELS[9] == frozenset({Region.R2, Region.R4})

    def test_names(self):
        assert all_models().names() == [f"w{k}" for k in range(1, 17)]

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            ModelUniverse((ALL_MODELS[0], ALL_MODELS[0]))


class TestEvaluate:
    def test_pair_atom(self):
        assert evaluate(CANONICAL["I"], frozenset({Region.R1}))

    def test_empty_model_satisfies_universals(self):
        w16 = frozenset()
        assert evaluate(CANONICAL["A"], w16)
        assert evaluate(CANONICAL["E"], w16)
        assert not evaluate(CANONICAL["I"], w16)
        assert not evaluate(CANONICAL["O"], w16)

    def test_signed_term_atom(self):
        f = parse_formula("ex(~A)")
        assert evaluate(f, frozenset({Region.R3}))
        assert not evaluate(f, frozenset({Region.R1, Region.R2}))


class TestBitstrings:
    def test_universal_profile(self, full16):
        assert str(bitstring(CANONICAL["A"], full16)) == "0001001010110111"

    def test_existential_profile(self, full16):
        assert str(bitstring(CANONICAL["I"], full16)) == "1111011010010000"

    def test_tautology(self, full16):
        assert bitstring(parse_formula("ex(A) | not ex(A)"), full16).all_ones

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            Bitstring((True,)) & Bitstring((True, False))

    @given(formulas)
    def test_boolean_homomorphism(self, f):
        from oppositions import And, Not, Or
        u = all_models()
        b = bitstring(f, u)
        assert bitstring(Not(f), u) == ~b
        assert bitstring(And(f, f), u) == b
        assert bitstring(Or(f, f), u) == b


class TestRestrict:
    def test_nonempty_subject(self):
        kept = restrict(all_models(), [nonempty("A")])
        assert kept.names() == ["w1", "w2", "w3", "w4", "w5", "w6", "w7",
                                "w8", "w9", "w10", "w12", "w13"]

    def test_all_four_terms(self):
        kept = restrict(all_models(), [nonempty("A"), nonempty("~A"),
                                       nonempty("B"), nonempty("~B")])
        assert kept.names() == ["w1", "w2", "w3", "w4", "w5", "w8", "w9"]

    def test_contradictory_constraints(self):
        kept = restrict(all_models(), [nonempty("A"), empty("A")])
        assert len(kept) == 0

    def test_full_is_empty_of_negation(self):
        assert full("A") == empty("~A")

    def test_idempotent_and_order_preserving(self):
        constraints = [nonempty("B")]
        once = restrict(all_models(), constraints)
        assert restrict(once, constraints) == once
        positions = [ALL_MODELS.index(m) for m in once]
        assert positions == sorted(positions)


class TestFiniteOracle:
    @pytest.mark.parametrize("size,count", [(0, 1), (1, 5), (4, 341)])
    def test_universe_counts(self, size, count):
        assert len(enumerate_universes(size)) == count

    def test_regions_of(self):
        assert regions_of(FiniteUniverse(())) == frozenset()
        assert regions_of(FiniteUniverse((Region.R2,))) == ALL_MODELS[12]
        assert regions_of(FiniteUniverse(tuple(Region))) == ALL_MODELS[0]

    def test_surjective_at_four_not_three(self):
        hit4 = {regions_of(fu) for fu in enumerate_universes(4)}
        assert hit4 == set(ALL_MODELS)
        hit3 = {regions_of(fu) for fu in enumerate_universes(3)}
        assert frozenset(Region) not in hit3

    def test_direct_evaluation_cases(self):
        assert evaluate_direct(CANONICAL["A"], FiniteUniverse(()))
        assert evaluate_direct(CANONICAL["I"], FiniteUniverse((Region.R1,)))
        guarded = parse_canonical("A[A!]")
        assert not evaluate_direct(guarded, FiniteUniverse((Region.R2,)))

    @given(formulas)
    def test_oracle_agreement(self, f):
        for fu in enumerate_universes(2):
            assert evaluate_direct(f, fu) == evaluate(f, regions_of(fu))
