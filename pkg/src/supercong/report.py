"""Verification outcomes."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

NOT_APPLICABLE = "n/a"


@dataclass(frozen=True)
class CheckReport:
    """One verification outcome.

    ``passed`` is True/False for a decided check and None when the check's
    hypothesis does not hold (not applicable). A not-applicable report may
    still carry the computed value.
    """

    check: str
    inputs: dict[str, str]
    computed: str
    expected: str
    passed: Optional[bool]
    note: str = field(default="", compare=False)

    @property
    def status(self) -> str:
        if self.passed is None:
            return "not_applicable"
        return "pass" if self.passed else "fail"

    @property
    def prime(self) -> int:
        return int(self.inputs.get("p", 0))

    def sort_key(self) -> tuple:
        return (self.check, self.prime, tuple(_input_key(v) for v in self.inputs.values()))

    def to_dict(self) -> dict:
        out = {
            "check": self.check,
            "inputs": dict(self.inputs),
            "computed": self.computed,
            "expected": self.expected,
            "pass": self.passed,
        }
        if self.note:
            out["note"] = self.note
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _input_key(value: str):
    try:
        return (0, Fraction(value), "")
    except (ValueError, ZeroDivisionError):
        return (1, Fraction(0), value)


def make_report(check, inputs, computed, expected, passed, note="") -> CheckReport:
    return CheckReport(
        check=check,
        inputs={k: str(v) for k, v in inputs.items()},
        computed=str(computed),
        expected=str(expected),
        passed=passed,
        note=note,
    )
