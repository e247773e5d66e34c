import json

import pytest

from petdom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolve:
    def test_one_two_value(self, capsys):
        code, out, _ = run(capsys, "solve", "--n", "13", "--kind", "one-two",
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["minimum"] == 9
        assert doc["method"] == "transfer-dp"
        assert "witness" not in doc

    def test_one_two_total_n5(self, capsys):
        code, out, _ = run(capsys, "solve", "--n", "5", "--kind", "one-two-total",
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["minimum"] == 5
        assert doc["method"] == "brute-force"  # auto picks brute for 2n <= 20

    def test_small_n_usage_error(self, capsys):
        code, _, err = run(capsys, "solve", "--n", "4", "--kind", "one-two")
        assert code == 2
        assert "error" in err

    def test_witness_flag(self, capsys):
        code, out, _ = run(capsys, "solve", "--n", "9", "--kind", "one-two",
                           "--witness", "--format", "json")
        doc = json.loads(out)
        assert len(doc["witness"]) == doc["minimum"] == 6

    def test_method_brute_over_limit(self, capsys):
        code, _, err = run(capsys, "solve", "--n", "14", "--kind", "one-two",
                           "--method", "brute")
        assert code == 2
        assert "2n <= 26" in err

    def test_k_not_two_rejected(self, capsys):
        code, _, err = run(capsys, "solve", "--n", "9", "--k", "3",
                           "--kind", "one-two")
        assert code == 2

    def test_bad_flag_usage(self, capsys):
        code, _, _ = run(capsys, "solve", "--n", "9", "--kind", "bogus")
        assert code == 2


class TestVerify:
    def test_one_two_range(self, capsys):
        code, out, _ = run(capsys, "verify", "--kind", "one-two",
                           "--from", "5", "--to", "60", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,formula,dp,match"
        assert len(lines) == 57
        assert all(line.endswith("True") for line in lines[1:])

    def test_plain_range(self, capsys):
        code, out, _ = run(capsys, "verify", "--kind", "plain",
                           "--from", "5", "--to", "60", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["all_match"] is True
        assert len(doc["rows"]) == 56

    def test_bad_range(self, capsys):
        code, _, _ = run(capsys, "verify", "--kind", "one-two",
                         "--from", "4", "--to", "10")
        assert code == 2

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        # a formula disagreement must surface as exit 1
        import petdom.cli as cli
        from petdom import DominationKind

        monkeypatch.setitem(cli._FORMULAS, DominationKind.ONE_TWO, lambda n: 1)
        code, out, _ = run(capsys, "verify", "--kind", "one-two",
                           "--from", "5", "--to", "6", "--format", "json")
        assert code == 1
        assert json.loads(out)["all_match"] is False


class TestConstruct:
    def test_n9(self, capsys):
        code, out, _ = run(capsys, "construct", "--n", "9", "--kind", "one-two",
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["source"] == "periodic-pattern"
        assert doc["set"] == ["u1", "u4", "u7", "v1", "v4", "v7"]

    def test_n8_small_layout(self, capsys):
        code, out, _ = run(capsys, "construct", "--n", "8", "--kind", "one-two",
                           "--format", "json")
        doc = json.loads(out)
        assert doc["size"] == 6
        assert doc["set"] == ["u1", "u4", "v1", "v4", "v6", "v7"]

    def test_n13_total(self, capsys):
        code, out, _ = run(capsys, "construct", "--n", "13",
                           "--kind", "one-two-total", "--format", "json")
        doc = json.loads(out)
        assert doc["size"] == 10
        assert doc["source"] == "spliced-pattern"

    def test_bad_n(self, capsys):
        code, _, _ = run(capsys, "construct", "--n", "4", "--kind", "one-two")
        assert code == 2


class TestTable:
    def test_f_column_5_12(self, capsys):
        code, out, _ = run(capsys, "table", "--from", "5", "--to", "12",
                           "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 9
        f_col = [int(line.split(",")[3]) for line in lines[1:]]
        assert f_col == [4, 4, 5, 6, 6, 8, 8, 8]

    def test_single_row(self, capsys):
        code, out, _ = run(capsys, "table", "--from", "6", "--to", "6",
                           "--format", "csv")
        row = out.strip().splitlines()[1].split(",")
        assert row == ["6", "4", "4", "4", "4", "4", "4", "4", "4"]

    def test_empty_range(self, capsys):
        code, _, _ = run(capsys, "table", "--from", "9", "--to", "7")
        assert code == 2


class TestCensus:
    def test_s9(self, capsys):
        code, out, _ = run(capsys, "census", "--n", "9",
                           "--set", "u1,v1,u4,v4,u7,v7", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["census"] == {"x": {"2": 3}, "y": {}}
        assert doc["inequalities"]["eq2"] == {"ok": True, "lhs": 18, "rhs": 18}

    def test_s6(self, capsys):
        code, out, _ = run(capsys, "census", "--n", "6",
                           "--set", "u1,v1,u4,v4", "--format", "json")
        doc = json.loads(out)
        assert doc["valid"] is True
        assert doc["census"]["x"] == {"2": 2}
        assert doc["inequalities"]["eq2"] == {"ok": True, "lhs": 12, "rhs": 12}

    def test_invalid_set_exit1(self, capsys):
        code, out, _ = run(capsys, "census", "--n", "5", "--set", "u1,v1",
                           "--format", "json")
        assert code == 1
        doc = json.loads(out)
        assert doc["valid"] is False
        assert doc["violations"]


class TestEq1:
    def test_n12_empty(self, capsys):
        code, out, _ = run(capsys, "eq1", "--n", "12", "--format", "json")
        assert code == 0
        assert json.loads(out)["count"] == 0

    def test_n10_count(self, capsys):
        code, out, _ = run(capsys, "eq1", "--n", "10", "--format", "json")
        assert json.loads(out)["count"] == 10

    def test_n22_guard(self, capsys):
        code, _, _ = run(capsys, "eq1", "--n", "22")
        assert code == 2


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("solve", "--n", "13", "--kind", "one-two", "--witness",
             "--format", "json"),
            ("table", "--from", "5", "--to", "9", "--format", "csv"),
            ("construct", "--n", "19", "--kind", "one-two", "--format", "json"),
            ("eq1", "--n", "10", "--format", "csv"),
        ],
    )
    def test_byte_identical(self, capsys, argv):
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second
