"""Verification reports and canonical JSON output."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["VerifyReport", "canonical_json", "decimal"]


def decimal(x) -> str:
    """Serialize an exact number (int, Fraction, bool) as a decimal string."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (tuple, list)):
        return ",".join(decimal(y) for y in x)
    return str(x)


def canonical_json(obj) -> str:
    # sorted keys + fixed separators: dumps(loads(out)) reproduces out byte for byte
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


@dataclass
class VerifyReport:
    suite: str
    parameters: dict[str, str]
    cases: int = 0
    failures: list[dict[str, str]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def add_failure(self, case: str, expected, actual) -> None:
        self.failures.append(
            {"case": case, "expected": decimal(expected), "actual": decimal(actual)}
        )

    def to_dict(self, include_timing: bool = False) -> dict:
        """JSON-ready form.  Elapsed time is opt-in so reports stay reproducible."""
        out = {
            "suite": self.suite,
            "parameters": dict(self.parameters),
            "cases": str(self.cases),
            "failures": list(self.failures),
            "passed": self.passed,
        }
        if include_timing:
            out["elapsed_seconds"] = f"{self.elapsed:.3f}"
        return out
