"""Pass/fail records for theorem batteries."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    witness: Any = None
    # conditional checks rest on hypotheses that cannot be verified from one
    # algebra; they are reported but do not fail a battery
    conditional: bool = False

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": bool(self.passed), "conditional": self.conditional}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = _plain(self.witness)
        return out


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.detail, c.witness, c.conditional))

    @property
    def passed(self) -> bool:
        """True when every unconditional check passes."""
        return all(c.passed for c in self.checks if not c.conditional)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed and not c.conditional]

    def to_dict(self) -> dict:
        return {"title": self.title, "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            tag = "PASS" if c.passed else ("SKIP" if c.conditional else "FAIL")
            line = f"{tag}  {c.name}"
            if c.detail:
                line += f"  ({c.detail})"
            if not c.passed and c.witness is not None:
                line += f"  witness: {_plain(c.witness)}"
            out.append(line)
        return out


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (str, bool)) or x is None:
        return x
    try:
        return int(x)
    except (TypeError, ValueError):
        return str(x)
