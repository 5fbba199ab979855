import pytest
from hypothesis import given
import hypothesis.strategies as st

from oppositions import (
    ARISTOTELIAN_SEQUENTS,
    And,
    Bitstring,
    CANONICAL,
    EmptyUniverse,
    KEYNESIAN_SEQUENTS,
    MODEL_NAME,
    ModelUniverse,
    NotCellConstant,
    Relation,
    all_models,
    bitstring,
    converse,
    empty,
    entails,
    has_import,
    incompatible,
    nonempty,
    normal_universe,
    parse_canonical,
    parse_formula,
    partition_bitstring,
    relate,
    relation_table,
    restrict,
    sequent,
    signature_partition,
    verify_sequents,
)

bit_pairs = st.integers(1, 8).flatmap(
    lambda n: st.tuples(
        st.lists(st.booleans(), min_size=n, max_size=n),
        st.lists(st.booleans(), min_size=n, max_size=n),
    )
)


def bits(letter, universe):
    return bitstring(CANONICAL[letter], universe)


@pytest.fixture(scope="module")
def nonempty_a():
    return restrict(all_models(), [nonempty("A")])


class TestRelate:
    def test_contradictory_over_all_models(self, full16):
        assert relate(bits("A", full16), bits("O", full16)) is Relation.CONTRADICTORY

    def test_contrary_on_restricted_universe(self, nonempty_a):
        assert relate(bits("A", nonempty_a), bits("E", nonempty_a)) is Relation.CONTRARY

    def test_unconnected_over_all_models(self, full16):
        assert relate(bits("A", full16), bits("E", full16)) is Relation.UNCONNECTED

    def test_degenerate(self, full16):
        top = bitstring(parse_formula("ex(A) | not ex(A)"), full16)
        assert relate(top, bits("A", full16)) is Relation.DEGENERATE

    def test_length_mismatch(self):
        from oppositions import LengthMismatch
        with pytest.raises(LengthMismatch):
            relate(Bitstring((True,)), Bitstring((True, False)))

    @given(bit_pairs)
    def test_converse_pairs(self, pair):
        b1, b2 = Bitstring(tuple(pair[0])), Bitstring(tuple(pair[1]))
        assert relate(b2, b1) is converse(relate(b1, b2))

    @given(bit_pairs, st.randoms(use_true_random=False))
    def test_permutation_invariance(self, pair, rng):
        b1, b2 = pair
        order = list(range(len(b1)))
        rng.shuffle(order)
        p1 = Bitstring(tuple(b1[k] for k in order))
        p2 = Bitstring(tuple(b2[k] for k in order))
        assert relate(p1, p2) is relate(Bitstring(tuple(b1)), Bitstring(tuple(b2)))

    @given(bit_pairs)
    def test_contradiction_is_complementation(self, pair):
        b1, b2 = Bitstring(tuple(pair[0])), Bitstring(tuple(pair[1]))
        if relate(b1, b2) is Relation.CONTRADICTORY:
            assert b2 == ~b1


class TestEntailment:
    def test_subalternation_on_restricted_universe(self, nonempty_a, full16):
        assert entails(bits("A", nonempty_a), bits("I", nonempty_a))
        assert not entails(bits("A", full16), bits("I", full16))

    def test_incompatible_with_own_complement(self, full16):
        b = bits("I", full16)
        assert incompatible(b, ~b)

    @given(bit_pairs)
    def test_incompatibility_is_entailment_of_negation(self, pair):
        b1, b2 = Bitstring(tuple(pair[0])), Bitstring(tuple(pair[1]))
        assert incompatible(b1, b2) == entails(b1, ~b2)


class TestPartitions:
    def test_three_cells(self, nonempty_a):
        forms = [CANONICAL[x] for x in ("A", "E", "I", "O")]
        anchors = [CANONICAL["A"], And(CANONICAL["I"], CANONICAL["O"]),
                   CANONICAL["E"]]
        p = signature_partition(forms, nonempty_a, anchors=anchors)
        named = [tuple(MODEL_NAME[m] for m in cell) for cell in p.cells]
        assert named == [
            ("w4", "w7", "w9", "w12"),
            ("w1", "w2", "w3", "w6"),
            ("w5", "w8", "w10", "w13"),
        ]
        assert str(partition_bitstring(CANONICAL["A"], p)) == "100"
        assert str(partition_bitstring(CANONICAL["O"], p)) == "011"

    def test_default_order_is_first_occurrence(self, nonempty_a):
        forms = [CANONICAL[x] for x in ("A", "E", "I", "O")]
        p = signature_partition(forms, nonempty_a)
        assert p.cells[0][0] == nonempty_a[0]

    def test_seven_singleton_cells(self):
        u = normal_universe()
        forms = list(CANONICAL.values())
        p = signature_partition(forms, u)
        assert len(p.cells) == 7
        assert all(len(cell) == 1 for cell in p.cells)

    def test_tautology_single_cell(self, full16):
        p = signature_partition([parse_formula("ex(A) | not ex(A)")], full16)
        assert len(p.cells) == 1
        assert len(p.cells[0]) == 16

    def test_not_cell_constant(self, full16):
        p = signature_partition([CANONICAL["A"]], full16)
        with pytest.raises(NotCellConstant):
            partition_bitstring(CANONICAL["I"], p)

    def test_empty_universe(self):
        with pytest.raises(EmptyUniverse):
            signature_partition([CANONICAL["A"]], ModelUniverse(()))

    def test_partition_profiles_preserve_relations(self, nonempty_a):
        forms = [CANONICAL[x] for x in ("A", "E", "I", "O")]
        p = signature_partition(forms, nonempty_a)
        for f in forms:
            for g in forms:
                coarse = relate(partition_bitstring(f, p), partition_bitstring(g, p))
                fine = relate(bitstring(f, nonempty_a), bitstring(g, nonempty_a))
                assert coarse is fine


class TestRelationTable:
    def test_classical_square(self, nonempty_a):
        forms = [CANONICAL[x] for x in ("A", "E", "I", "O")]
        t = relation_table(forms, nonempty_a)
        assert all(t[k][k] is Relation.EQUIVALENT for k in range(4))
        assert t[0][1] is Relation.CONTRARY
        assert t[0][3] is Relation.CONTRADICTORY
        assert t[0][2] is Relation.SUBALTERNATION
        assert t[2][3] is Relation.SUBCONTRARY

    def test_two_families_unconnected(self):
        u = normal_universe()
        t = relation_table([CANONICAL["A"], CANONICAL["A'"]], u)
        assert t[0][1] is Relation.UNCONNECTED

    def test_single_formula(self, full16):
        t = relation_table([CANONICAL["A"]], full16)
        assert t == [[Relation.EQUIVALENT]]


class TestImport:
    def test_existential_reading(self, full16):
        assert has_import(CANONICAL["I"], "A", full16)
        assert has_import(CANONICAL["O"], "A", full16)
        assert not has_import(CANONICAL["A"], "A", full16)
        assert not has_import(CANONICAL["E"], "A", full16)

    def test_explicit_guard_forces_import(self, full16):
        assert has_import(parse_canonical("A[A!]"), "A", full16)


class TestSequents:
    def test_aristotelian_hold_on_nonempty_subject(self, nonempty_a):
        assert all(r.holds for r in verify_sequents(ARISTOTELIAN_SEQUENTS, nonempty_a))

    def test_keynesian_hold_on_nonempty_complement(self):
        u = restrict(all_models(), [nonempty("~A")])
        assert all(r.holds for r in verify_sequents(KEYNESIAN_SEQUENTS, u))

    def test_fourteen_each(self):
        assert len(ARISTOTELIAN_SEQUENTS) == 14
        assert len(KEYNESIAN_SEQUENTS) == 14

    def test_subalternation_fails_unrestricted(self, full16):
        report, = verify_sequents([sequent("A |- I")], full16)
        assert not report.holds
        # every A-empty model defeats the subalternation
        assert [MODEL_NAME[m] for m in report.countermodels] == \
            ["w11", "w14", "w15", "w16"]

    def test_incompatibility_sequent(self, nonempty_a, full16):
        report, = verify_sequents([sequent("A _|_ E")], nonempty_a)
        assert report.holds
        report, = verify_sequents([sequent("A _|_ E")], full16)
        assert not report.holds

    def test_full_complement_failure(self):
        u = restrict(all_models(), [empty("~A")])
        for m in u:
            assert bitstring(CANONICAL["A'"], ModelUniverse((m,))).all_ones
            assert bitstring(CANONICAL["E'"], ModelUniverse((m,))).all_ones
            assert bitstring(CANONICAL["I'"], ModelUniverse((m,))).all_zeros
            assert bitstring(CANONICAL["O'"], ModelUniverse((m,))).all_zeros
