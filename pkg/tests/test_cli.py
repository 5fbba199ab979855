import json

import pytest

from oppositions.cli import main, parse_universe


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert err == ""
    return code, json.loads(out)


class TestModelGrammar:
    def test_default_all16(self):
        assert len(parse_universe("all16")) == 16

    def test_constraints(self):
        assert parse_universe("nonempty:A").names()[-1] == "w13"
        assert len(parse_universe("nonempty:A,nonempty:~A,nonempty:B,nonempty:~B")) == 7

    def test_explicit_models(self):
        assert parse_universe("w1,w16").names() == ["w1", "w16"]

    def test_bad_constraint(self):
        with pytest.raises(ValueError):
            parse_universe("mostly:A")


class TestCommands:
    def test_relate_contrary(self, capsys):
        code, payload = run_json(capsys, "relate", "A", "E",
                                 "--models", "nonempty:A")
        assert code == 0
        assert payload["result"]["relation"] == "contrary"

    def test_relate_unrestricted(self, capsys):
        code, payload = run_json(capsys, "relate", "A", "E")
        assert payload["result"]["relation"] == "unconnected"

    def test_bitstring_guarded_name(self, capsys):
        code, payload = run_json(capsys, "bitstring", "A[A!]",
                                 "--models", "all16")
        assert code == 0
        assert len(payload["result"]) == 16
        assert set(payload["result"]) <= {"0", "1"}

    def test_compile_reports_renderings(self, capsys):
        code, payload = run_json(capsys, "compile", "not ex(A & ~B)")
        assert payload["result"]["dsl"] == "not ex(A & ~B)"
        assert payload["result"]["tl"] == "-(+A-(+B))"
        assert payload["result"]["class"] == {"type": 4, "literals": 4}

    def test_table_json_and_csv(self, capsys):
        code, payload = run_json(capsys, "table", "A", "E", "I", "O",
                                 "--models", "nonempty:A")
        assert payload["result"]["A"]["O"] == "contradictory"
        code, out, _ = run(capsys, "table", "A", "E", "I", "O",
                           "--models", "nonempty:A", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == ",A,E,I,O"
        assert lines[1].startswith("A,equivalent,contrary,subalternation")

    def test_table_dot(self, capsys):
        code, out, _ = run(capsys, "table", "A", "O", "--format", "dot")
        assert code == 0
        assert out.startswith("digraph")
        assert "contradictory" in out

    def test_partition(self, capsys):
        code, payload = run_json(capsys, "partition", "A", "E", "I", "O",
                                 "--models", "nonempty:A")
        assert len(payload["result"]["cells"]) == 3

    def test_import_check(self, capsys):
        code, payload = run_json(capsys, "import-check", "I", "--term", "A")
        assert payload["result"]["has_import"] is True
        code, payload = run_json(capsys, "import-check", "A", "--term", "A")
        assert payload["result"]["has_import"] is False

    def test_catalog_and_cache(self, capsys, tmp_path):
        cache = tmp_path / "family.json"
        code, payload = run_json(capsys, "catalog", "--cache", str(cache))
        assert code == 0
        assert len(payload["result"]) == 256
        assert cache.exists()
        code, cached = run_json(capsys, "catalog", "--cache", str(cache))
        assert cached["result"] == payload["result"]

    def test_squares_default_pool(self, capsys):
        code, payload = run_json(capsys, "squares")
        assert code == 0
        assert payload["result"]["count"] == 36  # pinned
        tops = {(s["U1"], s["U2"]) for s in payload["result"]["squares"]}
        assert ("A[A!]", "E[A!]") in tops

    def test_squares_dot(self, capsys):
        code, out, _ = run(capsys, "squares", "--format", "dot",
                           "--pool", "A[A!],E[A!],I[A?],O[A?]")
        assert code == 0
        assert "subgraph cluster_0" in out

    def test_verify_paper_passes(self, capsys):
        code, payload = run_json(capsys, "verify-paper")
        assert code == 0
        assert payload["result"]["passed"] is True

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "out.json"
        code, out, err = run(capsys, "bitstring", "A", "--out", str(target))
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["result"] == "0001001010110111"

    def test_deterministic_output(self, capsys):
        _, first, _ = run(capsys, "table", "A", "E", "I", "O")
        _, second, _ = run(capsys, "table", "A", "E", "I", "O")
        assert first == second


class TestExitCodes:
    def test_parse_error_is_usage_error(self, capsys):
        code, out, err = run(capsys, "bitstring", "ex(")
        assert code == 2
        assert "error:" in err

    def test_bad_models_spec(self, capsys):
        code, out, err = run(capsys, "relate", "A", "E", "--models", "w99")
        assert code == 2

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 2
