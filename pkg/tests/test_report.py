import csv
import io
import json

import pytest

from fibwalk.battery import BatteryConfig, run_battery
from fibwalk.errors import ConfigError
from fibwalk.report import CheckResult, VerificationReport, emit_report, parse_json_report


@pytest.fixture(scope="module")
def theorem1_report():
    return run_battery(BatteryConfig(), only="theorem1")


def test_json_schema_fields(theorem1_report):
    doc = json.loads(emit_report(theorem1_report, "json"))
    (check,) = doc["checks"]
    assert set(check) == {"name", "params", "status", "witnesses", "elapsed_ms"}
    assert check["witnesses"]["walks"] == [[1, 13], [2, 21], [3, 34], [5, 55], [8, 89]]
    assert doc["summary"] == {"pass": 1, "fail": 0, "degenerate": 0}


def test_empty_report_every_format():
    empty = VerificationReport([], "0.0")
    assert json.loads(emit_report(empty, "json"))["checks"] == []
    rows = list(csv.reader(io.StringIO(emit_report(empty, "csv"))))
    assert rows == [["name", "params", "status", "witnesses", "elapsed_ms"]]
    assert "0 checks" in emit_report(empty, "text")


@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_serialization_deterministic(theorem1_report, fmt):
    assert emit_report(theorem1_report, fmt) == emit_report(theorem1_report, fmt)


def test_json_round_trip(theorem1_report):
    back = parse_json_report(emit_report(theorem1_report, "json"))
    assert back == theorem1_report
    assert emit_report(back, "json") == emit_report(theorem1_report, "json")


def test_round_trip_rejects_bad_summary():
    doc = VerificationReport([CheckResult("x", {}, "pass", {}, 0.0)], "v").to_dict()
    doc["summary"]["pass"] = 7
    with pytest.raises(ValueError):
        VerificationReport.from_dict(doc)


def test_csv_one_row_per_check():
    report = run_battery(BatteryConfig(), only="lemma7")
    rows = list(csv.DictReader(io.StringIO(emit_report(report, "csv"))))
    assert [r["name"] for r in rows] == ["lemma7"] * 3
    assert [json.loads(r["params"])["N"] for r in rows] == [1, 2, 3]


def test_unknown_format():
    with pytest.raises(ConfigError):
        emit_report(VerificationReport(), "xml")
