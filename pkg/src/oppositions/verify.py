"""Golden verification suite for the published tables and sequent lists.

Every check here pins behavior to an externally stated fact: the lettered
forms and their term-logic strings, the 3-bit and 7-bit partition tables, the
two 14-sequent lists, the empty-term and full-term failure models, and the
six named guarded squares.
"""

from __future__ import annotations

from .catalog import NAMED_SQUARES, is_valid_square, named_square
from .formula import CANONICAL, And, conjoin, parse_formula
from .models import (
    ALL_MODELS,
    MODEL_NAME,
    all_models,
    bitstring,
    empty,
    evaluate,
    nonempty,
    normal_universe,
    restrict,
)
from .relations import (
    ARISTOTELIAN_SEQUENTS,
    KEYNESIAN_SEQUENTS,
    Relation,
    has_import,
    relate,
    partition_bitstring,
    relation_table,
    signature_partition,
    verify_sequents,
)

_LETTERS = ("A", "E", "I", "O", "A'", "E'", "I'", "O'")

#: 3-bit profiles over the anchor-ordered Aristotelian (or Keynesian) cells.
THREE_BIT_TABLE = {"A": "100", "E": "001", "I": "110", "O": "011"}

#: 7-bit profiles over the anchor-ordered joint cells.
SEVEN_BIT_TABLE = {
    "A": "1100000",
    "E": "0000011",
    "I": "1111100",
    "O": "0011111",
    "A'": "1010000",
    "E'": "0000101",
    "I'": "1111010",
    "O'": "0101111",
}

#: Cell anchors for the joint 7-cell partition, in publication order.
SEVEN_BIT_ANCHOR_NAMES = (
    ("A", "A'"),
    ("A", "O'"),
    ("A'", "O"),
    ("I", "O", "I'", "O'"),
    ("I", "E'"),
    ("E", "I'"),
    ("E", "E'"),
)

# The 8x8 interrelation matrix over the 7-cell universe, frozen from the
# published 7-bit profiles.  eq/inc/ent/rev map to equivalence,
# incompatibility, entailment and its converse; cmp marks compatible pairs
# (subcontrary or unconnected).
_EIGHT_BY_EIGHT = (
    "eq  inc ent inc cmp inc ent cmp",
    "inc eq  inc ent inc cmp cmp ent",
    "rev inc eq  cmp rev cmp cmp cmp",
    "inc rev cmp eq  cmp rev cmp cmp",
    "cmp inc ent cmp eq  inc ent inc",
    "inc cmp cmp ent inc eq  inc ent",
    "rev cmp cmp cmp rev inc eq  cmp",
    "cmp rev cmp cmp inc rev cmp eq ",
)

_SYMBOL_KINDS = {
    "eq": {Relation.EQUIVALENT},
    "inc": {Relation.CONTRARY, Relation.CONTRADICTORY},
    "ent": {Relation.SUBALTERNATION},
    "rev": {Relation.SUPERALTERNATION},
    "cmp": {Relation.SUBCONTRARY, Relation.UNCONNECTED},
}


def _anchor(names):
    return conjoin(CANONICAL[n] for n in names)


def _check(name, passed, detail=None):
    entry = {"check": name, "passed": bool(passed)}
    if detail is not None:
        entry["detail"] = detail
    return entry


def verify_paper():
    """Run every golden check; returns a machine-readable report."""
    checks = []
    full16 = all_models()
    a_universe = restrict(full16, [nonempty("A")])
    not_a_universe = restrict(full16, [nonempty("~A")])
    normal = normal_universe()

    # Term-logic strings round-trip onto the lettered forms.
    tl_ok = all(
        parse_formula(text, "tl") == CANONICAL[letter]
        for letter, text in (
            ("A", "-(+A-(+B))"), ("E", "-(+A+B)"), ("I", "+(+A+B)"),
            ("O", "+(+A+(-B))"), ("E'", "-(-A+(-B))"), ("I'", "+(-A+(-B))"),
            ("O'", "+(-A+B)"),
        )
    ) and parse_formula("-(+A+B))", "tl") == CANONICAL["E"]
    checks.append(_check("term-logic strings map to the lettered forms", tl_ok))

    # 3-bit tables, Aristotelian and Keynesian.
    for tag, letters, universe in (
        ("Aristotelian", ("A", "E", "I", "O"), a_universe),
        ("Keynesian", ("A'", "E'", "I'", "O'"), not_a_universe),
    ):
        forms = [CANONICAL[x] for x in letters]
        anchors = [forms[0], And(forms[2], forms[3]), forms[1]]
        partition = signature_partition(forms, universe, anchors=anchors)
        got = {base: str(partition_bitstring(CANONICAL[x], partition))
               for base, x in zip(("A", "E", "I", "O"), letters)}
        checks.append(_check(
            f"3-bit table ({tag})",
            len(partition.cells) == 3 and got == THREE_BIT_TABLE,
            {"expected": THREE_BIT_TABLE, "got": got},
        ))

    # 7-bit joint table with publication cell order.
    anchors = [_anchor(names) for names in SEVEN_BIT_ANCHOR_NAMES]
    forms = [CANONICAL[x] for x in _LETTERS]
    partition = signature_partition(forms, normal, anchors=anchors)
    got = {x: str(partition_bitstring(CANONICAL[x], partition)) for x in _LETTERS}
    checks.append(_check(
        "7-bit joint table",
        len(normal) == 7 and got == SEVEN_BIT_TABLE,
        {"expected": SEVEN_BIT_TABLE, "got": got},
    ))

    # 8x8 interrelations over the 7-cell universe.
    table = relation_table(forms, normal)
    mismatches = []
    for i, row in enumerate(_EIGHT_BY_EIGHT):
        for j, symbol in enumerate(row.split()):
            if table[i][j] not in _SYMBOL_KINDS[symbol]:
                mismatches.append(f"{_LETTERS[i]}/{_LETTERS[j]}: {table[i][j]}")
    checks.append(_check("8x8 interrelation table", not mismatches,
                         {"mismatches": mismatches}))

    # Sequent lists on their validating universes.
    for tag, sequents, universe in (
        ("Aristotelian", ARISTOTELIAN_SEQUENTS, a_universe),
        ("Keynesian", KEYNESIAN_SEQUENTS, not_a_universe),
    ):
        reports = verify_sequents(sequents, universe)
        failed = [r.sequent.label for r in reports if not r.holds]
        checks.append(_check(f"14 {tag} sequents hold", not failed,
                             {"failed": failed}))

    # Empty-subject failure model: universals true, existentials false.
    w16 = ALL_MODELS[15]
    checks.append(_check(
        "empty-A model satisfies A and E, refutes I and O",
        all((
            evaluate(CANONICAL["A"], w16), evaluate(CANONICAL["E"], w16),
            not evaluate(CANONICAL["I"], w16), not evaluate(CANONICAL["O"], w16),
        )),
    ))

    # Full-subject failure: wherever nothing is not-A.
    full_a = restrict(full16, [empty("~A")])
    checks.append(_check(
        "full-A models satisfy A' and E', refute I' and O'",
        all(
            evaluate(CANONICAL["A'"], m) and evaluate(CANONICAL["E'"], m)
            and not evaluate(CANONICAL["I'"], m) and not evaluate(CANONICAL["O'"], m)
            for m in full_a
        ),
    ))

    # Classical relations degrade over the unrestricted universe.
    a16 = bitstring(CANONICAL["A"], full16)
    e16 = bitstring(CANONICAL["E"], full16)
    i16 = bitstring(CANONICAL["I"], full16)
    o16 = bitstring(CANONICAL["O"], full16)
    checks.append(_check(
        "over all 16 models: A/O stays contradictory, A/E and A-to-I fail at w16",
        relate(a16, o16) is Relation.CONTRADICTORY
        and relate(a16, e16) is not Relation.CONTRARY
        and relate(a16, i16) is not Relation.SUBALTERNATION
        and a16.bits[15] and e16.bits[15] and not i16.bits[15],
        {"countermodel": MODEL_NAME[w16]},
    ))

    # Guarded squares hold everywhere; the plain square only on nonempty A.
    for name in NAMED_SQUARES:
        report = is_valid_square(*named_square(name), full16)
        failed = [k for k, ok in report.checks.items() if not ok]
        checks.append(_check(f"square {name} valid over all 16 models",
                             report.valid, {"failed": failed}))
    plain = tuple(CANONICAL[x] for x in ("A", "E", "I", "O"))
    checks.append(_check(
        "plain square invalid over all 16 models",
        not is_valid_square(*plain, full16).valid,
    ))
    checks.append(_check(
        "plain square valid over nonempty-A models",
        is_valid_square(*plain, a_universe).valid,
    ))

    # Existential import under the plain existential reading.
    import_ok = (
        has_import(CANONICAL["I"], "A", full16)
        and has_import(CANONICAL["O"], "A", full16)
        and not has_import(CANONICAL["A"], "A", full16)
        and not has_import(CANONICAL["E"], "A", full16)
    )
    checks.append(_check("I and O carry import about A; A and E do not", import_ok))

    return {"passed": all(c["passed"] for c in checks), "checks": checks}
