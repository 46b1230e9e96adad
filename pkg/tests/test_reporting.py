import json

import pytest

from polyaxial.commands.reporting import (
    CSV_FIELDS,
    Report,
    render_csv,
    render_json,
    require_pass,
    write_report,
)
from polyaxial.exceptions import ToleranceFailure
from polyaxial.schemas import CheckRecord


def _record(check_id, passed=True, lhs=0.0):
    return CheckRecord(
        check_id=check_id, suite="demo", paper_ref="a = b", lhs=lhs, rhs=0.0, tolerance=1e-8, passed=passed,
    )


@pytest.fixture
def report():
    return Report("demo", [_record("demo.a"), _record("demo.b", passed=False, lhs=float("nan"))], {"note": 1})


def test_json_layout(report):
    text = render_json(report, generated_at="2026-01-01T00:00:00+00:00")
    lines = text.splitlines()
    assert lines[1] == '  "generated_at": "2026-01-01T00:00:00+00:00",'
    doc = json.loads(text)
    assert doc["command"] == "demo"
    assert doc["note"] == 1
    assert doc["records"][1]["lhs"] is None
    assert doc["records"][0]["pass"] is True


def test_csv_layout(report):
    rows = render_csv(report).splitlines()
    assert rows[0] == ",".join(CSV_FIELDS)
    assert rows[1].startswith("demo.a,a = b,")
    assert len(rows) == 3


def test_write_to_stdout(report, capsys):
    write_report(report, None, "csv")
    assert capsys.readouterr().out.startswith("check_id,")


def test_write_to_file(report, tmp_path):
    path = tmp_path / "report.json"
    write_report(report, str(path), "json")
    assert json.loads(path.read_text(encoding="utf-8"))["command"] == "demo"


def test_require_pass(report):
    assert [r.check_id for r in report.failures] == ["demo.b"]
    with pytest.raises(ToleranceFailure, match="1 of 2 checks failed: demo.b"):
        require_pass(report)
    require_pass(Report("demo", [_record("demo.a")]))
