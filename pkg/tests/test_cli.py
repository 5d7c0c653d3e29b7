"""Exit codes and output formats of the command-line front end."""

from __future__ import annotations

import csv
import io
import json

import pytest

from cpbasis.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSeries:
    def test_std_rank1_level1(self, capsys):
        code, out, _ = run(
            capsys, "series", "--kind", "std", "--rank", "1",
            "--level", "1", "--max-degree", "2",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "kind": "std",
            "rank": 1,
            "level": 1,
            "truncation": 2,
            "coeffs": [1, 3, 4],
        }


class TestLeadingTerms:
    def test_csv_rows(self, capsys):
        code, out, _ = run(
            capsys, "leading-terms", "--kind", "fs", "--rank", "2",
            "--level", "1", "--window", "1", "--format", "csv",
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 15
        assert {r["split"] for r in rows} == {"0", "1", "2"}
        assert all(r["window"] == "1" for r in rows)

    def test_json_deterministic(self, capsys):
        args = (
            "leading-terms", "--kind", "std", "--rank", "1",
            "--level", "2", "--window", "2", "--format", "json",
        )
        code, out1, _ = run(capsys, *args)
        assert code == 0
        _, out2, _ = run(capsys, *args)
        assert out1 == out2
        payload = json.loads(out1)
        assert payload["kind"] == "std" and len(payload["terms"]) > 0


class TestEnumerate:
    def test_csv_degrees(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "--kind", "std", "--rank", "1",
            "--level", "1", "--max-degree", "2", "--format", "csv",
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert sum(1 for r in rows if r["degree"] == "-2") == 4
        assert sum(1 for r in rows if r["degree"] == "0") == 1

    def test_json_counts(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "--kind", "fs", "--rank", "1",
            "--level", "1", "--max-degree", "3", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert len(payload["elements"]) == 4


class TestVerifiers:
    def test_coincidence(self, capsys):
        code, out, _ = run(
            capsys, "verify-coincidence", "--ell", "1",
            "--level", "1", "--max-degree", "6",
        )
        assert code == 0
        assert "coincidence verified" in out

    def test_audit_oracle(self, capsys):
        code, out, _ = run(
            capsys, "audit-oracle", "--rank", "2", "--level", "1",
            "--max-window", "2",
        )
        assert code == 0
        assert json.loads(out)["mismatches"] == []

    def test_branching(self, capsys):
        code, out, _ = run(capsys, "verify-branching", "--ell", "2", "--max-m", "3")
        assert code == 0
        assert "10" in out and "branching verified" in out

    def test_rr(self, capsys):
        code, out, _ = run(capsys, "rr-check", "--max", "4")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[1].split() == ["1", "1", "1"]
        assert lines[4].split() == ["4", "2", "2"]


class TestWeylDim:
    def test_dimension(self, capsys):
        code, out, _ = run(
            capsys, "weyl-dim", "--family", "C", "--rank", "2", "--weight", "2,0"
        )
        assert code == 0
        assert out.strip() == "10"

    def test_rational_weight(self, capsys):
        code, out, _ = run(
            capsys, "weyl-dim", "--family", "B", "--rank", "2", "--weight", "1/2,1/2"
        )
        assert code == 0
        assert out.strip() == "4"

    def test_non_dominant_is_usage_error(self, capsys):
        code, _, err = run(
            capsys, "weyl-dim", "--family", "C", "--rank", "2", "--weight", "1,2"
        )
        assert code == 2
        assert "error" in err


class TestUsageErrors:
    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["series", "--kind", "std", "--rank", "1", "--level", "1",
                  "--max-degree", "2", "--bogus"])
        assert exc.value.code == 2

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2
