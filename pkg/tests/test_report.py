import json

import pytest

from qschwarz.algebra import QSeries
from qschwarz.report import CheckReport, all_passed, emit_report, equality_check, series_check


def _rec(status="pass", expected="1", actual="1"):
    return CheckReport("s", "c", status, expected, actual, "anchor")


def test_empty_reports():
    assert emit_report([], "json") == "[]\n"
    assert emit_report([], "text") == ""
    assert all_passed([])


def test_single_pass_json():
    out = emit_report([_rec()], "json")
    assert json.loads(out) == [
        {"suite": "s", "check": "c", "status": "pass", "expected": "1", "actual": "1", "paper_anchor": "anchor"}
    ]
    assert out.count("\n") == 3


def test_fail_needs_both_sides():
    with pytest.raises(ValueError):
        _rec("fail", "", "2")
    with pytest.raises(ValueError):
        _rec("maybe")
    r = _rec("fail", "1", "2")
    assert not all_passed([r])
    assert "(expected 1)" in emit_report([r])


def test_skip_is_not_failure():
    assert all_passed([_rec("skip", "", "")])


def test_equality_and_series_checks():
    assert equality_check("s", "c", 1, 1, "a").passed
    assert equality_check("s", "c", 1, 2, "a").status == "fail"
    a, b = QSeries([1, 2, 3], 3), QSeries([1, 2, 4], 3)
    assert series_check("s", "c", a, a, "x").passed
    bad = series_check("s", "c", a, b, "x")
    assert bad.status == "fail" and "q^2" in bad.actual


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_report([_rec()], "xml")
