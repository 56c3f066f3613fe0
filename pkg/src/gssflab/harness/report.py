# -*- coding:utf-8 -*-
import json
from dataclasses import dataclass, field
from typing import List, Optional

from gssflab.utils import format_residual

__all__ = [
    "PASS",
    "FAIL",
    "INCONCLUSIVE",
    "FORWARD",
    "IDENTITY",
    "EXIT_CODES",
    "Precondition",
    "VerificationReport",
    "combine_verdicts",
    "dump_report",
    "write_report",
]

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"

FORWARD = "forward"
IDENTITY = "backward-identity"

EXIT_CODES = {PASS: 0, FAIL: 1, INCONCLUSIVE: 2}


@dataclass(frozen=True)
class Precondition:
    name: str
    value: float
    satisfied: bool

    def as_dict(self):
        return {"name": self.name, "value": format_residual(self.value), "satisfied": self.satisfied}


def combine_verdicts(residual, tol, preconditions) -> str:
    if not all(p.satisfied for p in preconditions):
        return INCONCLUSIVE
    return PASS if residual < tol else FAIL


@dataclass
class VerificationReport:
    """Outcome of one theorem, identity chain, validation or equivalence run.

    ``results`` holds one dict per named check; numeric values are written as
    fixed-precision strings by :func:`dump_report`.
    """

    theorem_id: str
    direction: str
    scenario: dict
    preconditions: List[Precondition] = field(default_factory=list)
    results: List[dict] = field(default_factory=list)
    max_residual: float = 0.0
    verdict: str = INCONCLUSIVE
    diagnostics: List[dict] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def exit_code(self):
        return EXIT_CODES[self.verdict]

    def as_dict(self, tool_version: Optional[str] = None) -> dict:
        from gssflab import __version__

        return {
            "tool_version": tool_version or __version__,
            "theorem_id": self.theorem_id,
            "direction": self.direction,
            "scenario": self.scenario,
            "preconditions": [p.as_dict() for p in self.preconditions],
            "results": [_stringify(r) for r in self.results],
            "diagnostics": [_stringify(d) for d in self.diagnostics],
            "notes": list(self.notes),
            "max_residual": format_residual(self.max_residual),
            "verdict": self.verdict,
        }


def _stringify(value):
    if isinstance(value, bool) or value is None or isinstance(value, (str, int)):
        return value
    if isinstance(value, float):
        return format_residual(value)
    if isinstance(value, dict):
        return {k: _stringify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    return format_residual(float(value))


def dump_report(report: VerificationReport) -> str:
    return json.dumps(report.as_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_report(report: VerificationReport, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_report(report))
