from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from partperm.cli import run

SCHEMA = json.loads((Path(__file__).parent.parent / "docs" / "cli_schema.json").read_text())


def call(*argv: str) -> tuple[int, str]:
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def validate(data, kind: str) -> None:
    jsonschema.validate(data, {**SCHEMA, "$ref": f"#/$defs/{kind}"})


def test_count():
    code, out = call("count", "--lambda", "2,1", "--r", "3")
    assert code == 0
    data = json.loads(out)
    assert data == {"lambda": [2, 1], "r": 3, "count": "2", "brute": "2"}
    validate(data, "count")


def test_count_skips_brute_force_when_large():
    code, out = call("count", "--lambda", "4,3", "--r", "5")
    data = json.loads(out)
    assert code == 0 and data["brute"] is None and data["count"] == "0"
    validate(data, "count")


def test_g_lambda():
    code, out = call("g-lambda", "--lambda", "3", "--r", "4")
    assert code == 0 and json.loads(out)["g"] == "5"
    code, out = call("g-lambda", "--lambda", "2", "--r-max", "3", "--trunc", "6")
    rows = json.loads(out)
    assert [row["g"] for row in rows] == ["0", "1", "0", "1"]
    validate(rows, "g-lambda")


def test_mnr():
    code, out = call("mnr", "--n", "2", "--r", "3")
    assert code == 0
    assert json.loads(out) == [{"class": [2], "coeff": "2"}]
    validate(json.loads(out), "mnr")


def test_pr_expand():
    code, out = call("pr-expand", "--n", "3", "--r", "1")
    assert code == 0 and json.loads(out) == [{"class": [2, 1], "coeff": "1"}]
    code, out = call("pr-expand", "--n", "4", "--r", "3")
    validate(json.loads(out), "pr-expand")


def test_tsv():
    code, out = call("--format", "tsv", "mnr", "--n", "3", "--r", "4")
    assert code == 0
    assert out.splitlines() == ["class\tcoeff", "3\t3", "1,1,1\t15"]
    code, out = call("count", "--lambda", "2,1", "--r", "3", "--format", "tsv")
    assert out.splitlines() == ["lambda\tr\tcount\tbrute", "2,1\t3\t2\t2"]


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--lambda", "1,2", "--r", "3"],
        ["count", "--lambda", "x", "--r", "3"],
        ["count", "--lambda", "", "--r", "3"],
        ["count", "--lambda", "2,1", "--r", "-1"],
        ["mnr", "--n", "0", "--r", "2"],
        ["pr-expand", "--n", "3"],
        ["g-lambda", "--lambda", "2", "--r", "5", "--trunc", "2"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, out = call(*argv)
    assert code == 2
    assert out == ""


def test_verify_small_grid():
    code, out = call("verify", "--max-n", "3", "--max-r", "4")
    assert code == 0
    data = json.loads(out)
    validate(data, "verify")
    assert data["all_passed"] and all(c["status"] == "pass" for c in data["checks"])


def test_verify_reports_failure(monkeypatch):
    import partperm.verify as verify

    def broken(c, max_n, max_r):
        c.expect(True, lambda: "")
        c.expect(False, lambda: "lhs - rhs = 1 * ()")

    monkeypatch.setattr(verify, "check_lascoux_thibon", broken)
    code, out = call("verify", "--max-n", "2", "--max-r", "2")
    assert code == 1
    data = json.loads(out)
    validate(data, "verify")
    failed = [c for c in data["checks"] if c["status"] == "fail"]
    assert [c["name"] for c in failed] == ["lascoux_thibon"]
    assert failed[0]["detail"] == "lhs - rhs = 1 * ()"


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "partperm", "pr-expand", "--n", "4", "--r", "4"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)
