"""Check records shared by the verification pipelines and the command line."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

from .algebra import QSeries

__all__ = ["CheckReport", "emit_report", "series_check", "equality_check"]

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class CheckReport:
    suite: str
    check: str
    status: str
    expected: str
    actual: str
    paper_anchor: str

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIP):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and not (self.expected and self.actual):
            raise ValueError("a failing check must carry both expected and actual values")

    @property
    def passed(self) -> bool:
        return self.status == PASS


def equality_check(suite: str, check: str, expected, actual, anchor: str, render=str) -> CheckReport:
    """Exact comparison; both sides are rendered into the record either way."""
    status = PASS if expected == actual else FAIL
    return CheckReport(suite, check, status, render(expected), render(actual), anchor)


def series_check(suite: str, check: str, lhs: QSeries, rhs: QSeries, anchor: str) -> CheckReport:
    """Coefficientwise comparison of two truncated series up to their common order."""
    n = min(lhs.order, rhs.order)
    bad = next((k for k in range(n) if lhs[k] != rhs[k]), None)
    expected = f"coefficients agree through q^{n - 1}"
    if bad is None:
        return CheckReport(suite, check, PASS, expected, f"max failing order: none (checked {n} coefficients)", anchor)
    actual = f"first mismatch at q^{bad}: lhs={lhs[bad]}, rhs={rhs[bad]}"
    return CheckReport(suite, check, FAIL, expected, actual, anchor)


def emit_report(reports: Sequence[CheckReport], fmt: str = "text") -> str:
    """Render records as a JSON array or as aligned text lines."""
    if fmt == "json":
        # a valid JSON array that still carries one record per line
        if not reports:
            return "[]\n"
        return "[\n" + ",\n".join(json.dumps(asdict(r)) for r in reports) + "\n]\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    if not reports:
        return ""
    w_suite = max(len(r.suite) for r in reports)
    w_check = max(len(r.check) for r in reports)
    lines = []
    for r in reports:
        line = f"{r.status.upper():4}  {r.suite:<{w_suite}}  {r.check:<{w_check}}  {r.actual}"
        if r.status == FAIL:
            line += f"  (expected {r.expected})"
        lines.append(line)
    return "\n".join(lines) + "\n"


def all_passed(reports: Iterable[CheckReport]) -> bool:
    return all(r.status != FAIL for r in reports)
