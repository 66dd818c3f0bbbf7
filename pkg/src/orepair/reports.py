from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckReport:
    """Outcome of a property sweep: how many cases were examined and how many failed."""

    name: str
    checked: int = 0
    failures: int = 0
    details: dict[str, Any] = field(default_factory=dict)
    messages: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, message: str | None = None) -> bool:
        self.checked += 1
        if not ok:
            self.failures += 1
            if message and len(self.messages) < 10:
                self.messages.append(message)
        return ok

    def record_many(self, ok: int, total: int, message: str | None = None) -> None:
        """Record ``total`` checks of which ``ok`` passed."""
        self.checked += total
        bad = total - ok
        if bad:
            self.failures += bad
            if message and len(self.messages) < 10:
                self.messages.append(message)

    def merge(self, other: "CheckReport") -> "CheckReport":
        self.checked += other.checked
        self.failures += other.failures
        self.messages.extend(other.messages[: max(0, 10 - len(self.messages))])
        return self

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "details": self.details,
            "messages": self.messages,
        }
