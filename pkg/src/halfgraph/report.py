"""Machine-readable check results shared by the verification suites and the CLI.

Every numeric field is an exact string ("195/4096", never a decimal); the
JSON layout is {"version": 1, "sections": [{"name", "checks": [...]}]}.
"""

from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass
from fractions import Fraction

SCHEMA_VERSION = 1


def exact_str(value) -> str:
    """Render a value as an exact string; Fractions keep their "p/q" form."""
    return str(value)


_EXACT_FORM = re.compile(r"^-?\d+(/\d+)?$")


def parse_exact(text: str) -> Fraction:
    """Inverse of exact_str for rational values ("3/98", "38", "-1/2").

    Decimal notation is rejected on purpose: every reported value must stay
    an exact rational string.
    """
    if not _EXACT_FORM.match(text.strip()):
        raise ValueError(f"not an exact rational string: {text!r}")
    return Fraction(text)


@dataclass(frozen=True)
class CheckResult:
    id: str
    claim: str
    computed: str
    bound: str
    passed: bool
    runtime_ms: int = 0

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "claim": self.claim,
            "computed": self.computed,
            "bound": self.bound,
            "pass": self.passed,
            "runtime_ms": self.runtime_ms,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CheckResult":
        return cls(
            id=data["id"],
            claim=data["claim"],
            computed=data["computed"],
            bound=data["bound"],
            passed=data["pass"],
            runtime_ms=data["runtime_ms"],
        )


def run_check(check_id: str, claim: str, compute) -> CheckResult:
    """Time a check; `compute` returns (computed, bound, passed)."""
    t0 = time.perf_counter()
    computed, bound, passed = compute()
    ms = int((time.perf_counter() - t0) * 1000)
    return CheckResult(check_id, claim, exact_str(computed), exact_str(bound), bool(passed), ms)


@dataclass
class IdentityReport:
    """A named bundle of identity checks (one verification suite's outcome)."""

    name: str
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_section(self) -> dict:
        return {"name": self.name, "checks": [c.to_dict() for c in self.checks]}


def emit_report(sections: list[IdentityReport]) -> dict:
    return {"version": SCHEMA_VERSION, "sections": [s.to_section() for s in sections]}


def parse_report(data: dict) -> list[IdentityReport]:
    if data.get("version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report version: {data.get('version')!r}")
    return [
        IdentityReport(sec["name"], [CheckResult.from_dict(c) for c in sec["checks"]])
        for sec in data["sections"]
    ]


def dump_report(sections: list[IdentityReport], path: str) -> None:
    with open(path, "w") as fh:
        json.dump(emit_report(sections), fh, indent=2)
        fh.write("\n")
