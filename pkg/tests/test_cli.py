import io
import json
from pathlib import Path

import jsonschema
import pytest

from fixbound.cli import CSV_HEADER, main

FIXTURES = Path(__file__).parent / "fixtures"

RECORD_SCHEMA = {
    "type": "object",
    "required": ["n", "dim", "bound", "witness", "kosniowski_threshold",
                 "frankel_threshold", "kosniowski_ok", "frankel_ok", "family"],
    "properties": {
        "n": {"type": "integer", "minimum": 3},
        "dim": {"type": "integer"},
        "bound": {"type": "integer", "minimum": 1},
        "witness": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "kosniowski_threshold": {"type": "integer"},
        "frankel_threshold": {"type": "integer"},
        "kosniowski_ok": {"type": "boolean"},
        "frankel_ok": {"type": "boolean"},
        "family": {"type": "string"},
    },
}


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_table_csv_golden():
    code, text = run("table", "4", "12", "--format", "csv")
    assert code == 0
    assert text == (FIXTURES / "table_4_12.csv").read_text()
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert [int(line.split(",")[4]) for line in lines[1:]] == [6, 24, 4, 12, 3, 8, 12, 6, 2]


def test_table_markdown_marks_violations():
    code, text = run("table", "4", "12")
    assert code == 0
    bold = [line for line in text.splitlines() if "**" in line]
    assert [line.split("|")[1].strip() for line in bold] == ["**16**", "**24**"]


def test_table_json_schema():
    code, text = run("table", "4", "4", "--format", "json")
    assert code == 0
    records = json.loads(text)
    assert len(records) == 1 and records[0]["bound"] == 6
    code, text = run("table", "3", "30", "--format", "json", "--full")
    for rec in json.loads(text):
        jsonschema.validate(rec, RECORD_SCHEMA)
        assert len(rec["full_witness"]) == rec["n"] + 1


def test_table_jobs_deterministic():
    serial = run("table", "13", "80", "--format", "csv")
    parallel = run("table", "13", "80", "--format", "csv", "--jobs", "4")
    assert serial == parallel


def test_table_bad_range():
    assert run("table", "9", "4")[0] == 1
    assert run("table", "2", "4")[0] == 1


def test_bound_command():
    code, text = run("bound", "5")
    assert code == 0
    assert "B(5) = 24" in text and "(1,11)" in text and "verified: true" in text
    code, text = run("bound", "3")
    assert code == 0 and "B(3) = 2" in text and "identity" in text
    code, text = run("bound", "4", "--full")
    assert "(0,1,4,1,0)" in text
    code, text = run("bound", "14", "--format", "json")
    jsonschema.validate(json.loads(text), RECORD_SCHEMA)


def test_bound_rejects_small_n(capsys):
    code, _ = run("bound", "2")
    assert code == 1
    assert "dim" in capsys.readouterr().err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        run("bound", "seven")
    assert exc.value.code == 1


def test_verify_command():
    code, text = run("verify", "3", "26")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 24 and all(line.endswith("agree") for line in lines)
    assert run("verify", "3", "5")[0] == 0


def test_verify_budget_exceeded(capsys):
    code, text = run("verify", "3", "30", "--oracle-budget", "40")
    assert code == 3
    assert "oracle budget exceeded" in text
    assert "disagree" not in text


def test_classify_command():
    code, text = run("classify", "12")
    assert code == 0 and "EvenDegenerate(k=1)" in text
    code, text = run("classify", "9")
    assert "ell = 0" in text and "{N_4} / {N_4, N_3, N_2, N_1}" in text
    code, text = run("classify", "8", "--format", "json")
    data = json.loads(text)
    assert data["family"] == "Generic" and data["ell"] == 0
    assert run("classify", "1")[0] == 1


def test_conjectures_command():
    code, text = run("conjectures", "4", "12", "--format", "csv")
    assert code == 0
    rows = [line.split(",") for line in text.splitlines()[1:]]
    assert [r[0] for r in rows if r[5] == "false"] == ["8", "12"]


def test_chern8_command():
    code, text = run("chern8")
    assert code == 0 and "= 2 " in text
    code, text = run("chern8", "7")
    assert "7/3" in text and "warning" in text
