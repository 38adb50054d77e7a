"""Structured results of verification sweeps, serializable for CI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    name: str
    checked: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, subject: str, lhs: str, rhs: str, matched: bool) -> None:
        self.checked += 1
        if matched:
            self.passed += 1
        else:
            self.failures.append({"partition": subject, "lhs": lhs, "rhs": rhs})

    def json_dict(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "failures": self.failures,
            "notes": self.notes,
        }
