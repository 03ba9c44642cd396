"""Plain report containers shared by the verification routines."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

PASS = "pass"
FAIL = "fail"
AGREES = "agrees"
DISAGREES = "disagrees"
OUT_OF_RANGE = "out of stated range"
INFO = "info"


@dataclass
class Check:
    name: str
    status: str
    params: Dict[str, Any] = field(default_factory=dict)
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == FAIL


@dataclass
class Report:
    """A list of checks.

    ``experimental`` reports only tabulate; their ``ok`` is always True so they
    never turn a verification run red.
    """

    title: str
    experimental: bool = False
    checks: List[Check] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(self, name: str, status, detail: str = "", **params) -> Check:
        if isinstance(status, bool):
            status = PASS if status else FAIL
        c = Check(name, status, params, detail)
        self.checks.append(c)
        return c

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.failed]

    @property
    def ok(self) -> bool:
        return self.experimental or not self.failures

    def count(self, status: str, name: Optional[str] = None) -> int:
        return sum(1 for c in self.checks if c.status == status and (name is None or c.name == name))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "experimental": self.experimental,
            "ok": self.ok,
            "notes": list(self.notes),
            "checks": [asdict(c) for c in self.checks],
        }

    def summary(self) -> str:
        by: Dict[str, Dict[str, int]] = {}
        for c in self.checks:
            by.setdefault(c.name, {}).setdefault(c.status, 0)
            by[c.name][c.status] += 1
        lines = [f"{self.title}: {'ok' if self.ok else 'FAILED'}"]
        for name, counts in by.items():
            lines.append("  " + name + ": " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
        lines.extend("  note: " + n for n in self.notes)
        return "\n".join(lines)
