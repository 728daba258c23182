"""Verification report model and its text/json/csv serializations."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

from fibwalk.errors import ConfigError

PASS = "pass"
FAIL = "fail"
DEGENERATE = "degenerate"
STATUSES = (PASS, FAIL, DEGENERATE)

FORMATS = ("text", "json", "csv")


@dataclass
class Fragment:
    """Outcome of a single verifier before timing and naming are attached."""

    status: str
    witnesses: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_bool(cls, ok: bool, **witnesses: Any) -> Fragment:
        return cls(PASS if ok else FAIL, dict(witnesses))


@dataclass
class CheckResult:
    name: str
    params: dict[str, Any]
    status: str
    witnesses: dict[str, Any]
    elapsed_ms: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "params": self.params,
            "status": self.status,
            "witnesses": self.witnesses,
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> CheckResult:
        return cls(d["name"], d["params"], d["status"], d["witnesses"], d["elapsed_ms"])


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)
    version: str = ""

    @property
    def summary(self) -> dict[str, int]:
        counts = {s: 0 for s in STATUSES}
        for c in self.checks:
            counts[c.status] += 1
        return counts

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "version": self.version,
            "summary": self.summary,
            "checks": [c.to_dict() for c in self.checks],
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> VerificationReport:
        report = cls([CheckResult.from_dict(c) for c in d["checks"]], d.get("version", ""))
        if d.get("summary", report.summary) != report.summary:
            raise ValueError("summary counts do not match the check list")
        return report


def _compact(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _render_text(report: VerificationReport) -> str:
    rows = [
        (c.name, _compact(c.params), c.status.upper(), f"{c.elapsed_ms:.1f}") for c in report.checks
    ]
    head = ("check", "params", "status", "ms")
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(head)]

    def line(cells: tuple[str, ...]) -> str:
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    out = [f"fibwalk verification report (version {report.version})", line(head)]
    out.append("  ".join("-" * w for w in widths))
    out.extend(line(r) for r in rows)
    s = report.summary
    out.append("")
    out.append(f"{len(report.checks)} checks: {s[PASS]} pass, {s[FAIL]} fail, {s[DEGENERATE]} degenerate")
    return "\n".join(out) + "\n"


def _render_csv(report: VerificationReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", "params", "status", "witnesses", "elapsed_ms"])
    for c in report.checks:
        writer.writerow([c.name, _compact(c.params), c.status, _compact(c.witnesses), c.elapsed_ms])
    return buf.getvalue()


def emit_report(report: VerificationReport, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(report)
    if fmt == "text":
        return _render_text(report)
    raise ConfigError(f"unknown report format {fmt!r}; choose from {', '.join(FORMATS)}")


def parse_json_report(text: str) -> VerificationReport:
    return VerificationReport.from_dict(json.loads(text))
