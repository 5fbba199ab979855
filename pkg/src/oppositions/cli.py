"""Command-line interface.

Formula arguments accept either proposition names (``A``, ``E'[~A!]``) or
DSL text (``not ex(A & ~B)``).  Output is JSON by default; ``--format csv``
works for matrix-shaped results and ``--format dot`` for the ``table`` and
``squares`` commands.  Exit codes: 0 success, 1 a requested check failed,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import catalog as _catalog
from .errors import OppositionError
from .formula import classify_type, parse_any, parse_formula, to_text
from .models import (
    MODEL_BY_NAME,
    ModelUniverse,
    all_models,
    bitstring,
    empty,
    enumerate_universes,
    evaluate,
    evaluate_direct,
    nonempty,
    regions_of,
    restrict,
)
from .relations import (
    has_import,
    partition_bitstring,
    relate,
    relation_table,
    signature_partition,
)
from .verify import verify_paper

_W_NAME_RE = re.compile(r"^w([1-9]|1[0-6])$")


def parse_universe(spec):
    """Parse the --models grammar.

    ``all16`` | constraint list ``nonempty:T,empty:T`` with T in
    {A,~A,B,~B} | explicit model list ``w1,w4,...``.
    """
    if spec is None or spec == "all16":
        return all_models()
    parts = [p.strip() for p in spec.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty --models specification")
    if all(_W_NAME_RE.match(p) for p in parts):
        return ModelUniverse(tuple(MODEL_BY_NAME[p] for p in parts))
    constraints = []
    for part in parts:
        kind, sep, term = part.partition(":")
        if not sep or kind not in ("nonempty", "empty"):
            raise ValueError(f"bad model constraint {part!r}")
        constraints.append(nonempty(term) if kind == "nonempty" else empty(term))
    return restrict(all_models(), constraints)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="oppositions",
        description="Compute logical relations between categorical propositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, formulas=0, variadic=False, models=True):
        p = sub.add_parser(name, help=help_)
        if variadic:
            p.add_argument("formulas", nargs="+", metavar="FORMULA")
        else:
            for k in range(formulas):
                p.add_argument(f"formula{k + 1 if formulas > 1 else ''}",
                               metavar="FORMULA")
        if models:
            p.add_argument("--models", default="all16",
                           help="all16 | nonempty:T,empty:T,... | w1,w2,...")
        p.add_argument("--format", choices=("json", "csv", "dot"), default="json")
        p.add_argument("--out", metavar="FILE", help="write output to FILE")
        return p

    add("compile", "parse a proposition and report its renderings", formulas=1,
        models=False).add_argument("--syntax", choices=("auto", "fol-dsl", "tl"),
                                   default="auto")
    add("bitstring", "compile a proposition to its truth profile", formulas=1)
    add("relate", "classify the relation between two propositions", formulas=2)
    add("table", "full relation matrix for several propositions", variadic=True)
    p = add("partition", "group models by joint truth values", variadic=True)
    p = add("catalog", "emit the 256-proposition family", models=False)
    p.add_argument("--cache", metavar="FILE",
                   help="read the catalog from FILE if present, else write it")
    p = add("squares", "enumerate valid squares of opposition", models=True)
    p.add_argument("--pool", default="chatti",
                   help="chatti | family256 | comma list of proposition names")
    p = add("import-check", "test existential import of a proposition", formulas=1)
    p.add_argument("--term", default="A", help="signed term: A, ~A, B or ~B")
    p = sub.add_parser("oracle", help="check region semantics against the "
                                      "finite-domain evaluator")
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--out", metavar="FILE")
    p = sub.add_parser("verify-paper", help="run the golden verification suite")
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--out", metavar="FILE")
    return parser


def _envelope(args, universe, result):
    query = {"command": args.command}
    for key in ("formula", "formula1", "formula2", "formulas", "term", "pool"):
        if hasattr(args, key) and getattr(args, key) is not None:
            query[key] = getattr(args, key)
    payload = {"query": query}
    if universe is not None:
        payload["universe"] = universe.names()
    payload["result"] = result
    return payload


def _pool(spec, universe):
    if spec == "family256":
        family = _catalog.family_256()
        return [(p.name or p.text(), p.formula) for p in family]
    if spec == "chatti":
        return sorted(_catalog.chatti_set().items())
    names = [n.strip() for n in spec.split(",") if n.strip()]
    return [(n, parse_any(n)) for n in names]


def _run(args):
    """Dispatch one parsed command; returns (payload, text_override, failed)."""
    failed = False

    if args.command == "compile":
        if args.syntax == "auto":
            f = parse_any(args.formula)
        else:
            f = parse_formula(args.formula, args.syntax)
        try:
            tl = to_text(f, "tl")
        except OppositionError:
            tl = None
        try:
            cls = classify_type(f)
            shape = {"type": cls.type_index, "literals": cls.literal_count}
        except OppositionError:
            shape = None
        return _envelope(args, None, {"dsl": to_text(f), "tl": tl,
                                      "class": shape}), None, failed

    if args.command == "bitstring":
        universe = parse_universe(args.models)
        f = parse_any(args.formula)
        return _envelope(args, universe, str(bitstring(f, universe))), None, failed

    if args.command == "relate":
        universe = parse_universe(args.models)
        b1 = bitstring(parse_any(args.formula1), universe)
        b2 = bitstring(parse_any(args.formula2), universe)
        result = {"relation": str(relate(b1, b2)),
                  "bitstrings": [str(b1), str(b2)]}
        return _envelope(args, universe, result), None, failed

    if args.command == "table":
        universe = parse_universe(args.models)
        forms = [parse_any(t) for t in args.formulas]
        matrix = relation_table(forms, universe)
        if args.format == "csv":
            return None, _matrix_csv(args.formulas, matrix), failed
        if args.format == "dot":
            return None, _table_dot(args.formulas, matrix), failed
        rows = {name: {other: str(matrix[i][j])
                       for j, other in enumerate(args.formulas)}
                for i, name in enumerate(args.formulas)}
        return _envelope(args, universe, rows), None, failed

    if args.command == "partition":
        universe = parse_universe(args.models)
        forms = [parse_any(t) for t in args.formulas]
        partition = signature_partition(forms, universe)
        cells = [{"models": [m for m in _cell_names(cell)]}
                 for cell in partition.cells]
        profiles = {name: str(partition_bitstring(f, partition))
                    for name, f in zip(args.formulas, forms)}
        return _envelope(args, universe,
                         {"cells": cells, "bitstrings": profiles}), None, failed

    if args.command == "catalog":
        if args.cache:
            import os
            if os.path.exists(args.cache):
                with open(args.cache, encoding="utf-8") as fh:
                    entries = json.load(fh)
                return _envelope(args, None, entries), None, failed
        full16 = all_models()
        entries = [
            {"index": k, "name": p.name, "dsl": p.text(),
             "bitstring": str(bitstring(p.formula, full16))}
            for k, p in enumerate(_catalog.family_256())
        ]
        if args.cache:
            with open(args.cache, "w", encoding="utf-8") as fh:
                json.dump(entries, fh, indent=2)
        if args.format == "csv":
            return None, _catalog_csv(entries), failed
        return _envelope(args, None, entries), None, failed

    if args.command == "squares":
        universe = parse_universe(args.models)
        pool = _pool(args.pool, universe)
        labels = {to_text(f): name for name, f in pool}
        reports = _catalog.enumerate_squares([f for _, f in pool], universe)
        if args.format == "dot":
            return None, _squares_dot(reports, labels), failed
        result = [
            {
                "U1": labels.get(to_text(r.u1), to_text(r.u1)),
                "U2": labels.get(to_text(r.u2), to_text(r.u2)),
                "P1": labels.get(to_text(r.p1), to_text(r.p1)),
                "P2": labels.get(to_text(r.p2), to_text(r.p2)),
                "bitstrings": [str(bitstring(f, universe))
                               for f in (r.u1, r.u2, r.p1, r.p2)],
            }
            for r in reports
        ]
        return _envelope(args, universe,
                         {"count": len(result), "squares": result}), None, failed

    if args.command == "import-check":
        universe = parse_universe(args.models)
        f = parse_any(args.formula)
        verdict = has_import(f, args.term, universe)
        return _envelope(args, universe, {"has_import": verdict}), None, failed

    if args.command == "oracle":
        universes = enumerate_universes(args.max_size)
        family = _catalog.family_256()
        disagreements = []
        for p in family:
            for fu in universes:
                if evaluate_direct(p.formula, fu) != evaluate(p.formula, regions_of(fu)):
                    disagreements.append({"formula": p.text(),
                                          "domain": [int(r) for r in fu.assignment]})
        failed = bool(disagreements)
        result = {
            "formulas": len(family),
            "universes": len(universes),
            "checks": len(family) * len(universes),
            "disagreements": disagreements,
        }
        payload = {"query": {"command": "oracle", "max_size": args.max_size},
                   "result": result}
        return payload, None, failed

    if args.command == "verify-paper":
        report = verify_paper()
        failed = not report["passed"]
        return {"query": {"command": "verify-paper"}, "result": report}, None, failed

    raise AssertionError(f"unhandled command {args.command!r}")


def _cell_names(cell):
    from .models import MODEL_NAME
    return [MODEL_NAME[m] for m in cell]


def _matrix_csv(names, matrix):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + list(names))
    for name, row in zip(names, matrix):
        writer.writerow([name] + [str(r) for r in row])
    return buf.getvalue()


def _catalog_csv(entries):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", "name", "dsl", "bitstring"])
    for e in entries:
        writer.writerow([e["index"], e["name"] or "", e["dsl"], e["bitstring"]])
    return buf.getvalue()


_EDGE_STYLE = {
    "contradictory": 'style=dashed, dir=none, label="contradictory"',
    "contrary": 'dir=none, label="contrary"',
    "subcontrary": 'dir=none, label="subcontrary"',
    "subalternation": 'label="subalternation"',
}


def _table_dot(names, matrix):
    lines = ["digraph oppositions {"]
    for name in names:
        lines.append(f'  "{name}";')
    for i, a in enumerate(names):
        for j, b in enumerate(names):
            kind = str(matrix[i][j])
            if i == j or kind not in _EDGE_STYLE:
                continue
            if kind != "subalternation" and j < i:
                continue  # draw each symmetric edge once
            lines.append(f'  "{a}" -> "{b}" [{_EDGE_STYLE[kind]}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _squares_dot(reports, labels):
    lines = ["digraph squares {"]
    for k, r in enumerate(reports):
        names = {pos: labels.get(to_text(f), to_text(f))
                 for pos, f in (("U1", r.u1), ("U2", r.u2),
                                ("P1", r.p1), ("P2", r.p2))}
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f'    label="square {k + 1}";')
        for pos, label in names.items():
            lines.append(f'    "{k}:{pos}" [label="{label}"];')
        lines.append(f'    "{k}:U1" -> "{k}:U2" [dir=none, label="contrary"];')
        lines.append(f'    "{k}:P1" -> "{k}:P2" [dir=none, label="subcontrary"];')
        lines.append(f'    "{k}:U1" -> "{k}:P2" [style=dashed, dir=none, label="contradictory"];')
        lines.append(f'    "{k}:U2" -> "{k}:P1" [style=dashed, dir=none, label="contradictory"];')
        lines.append(f'    "{k}:U1" -> "{k}:P1" [label="subalternation"];')
        lines.append(f'    "{k}:U2" -> "{k}:P2" [label="subalternation"];')
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text, failed = _run(args)
    except (OppositionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if text is None:
        text = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
