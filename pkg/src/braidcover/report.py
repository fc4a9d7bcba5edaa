"""Verification reports and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

SCHEMA = "braidcover/1"
STATUSES = ("pass", "fail", "skip")


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    witness: Any = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "fail" and self.witness is None:
            raise ValueError(f"failed check {self.name!r} carries no witness")


@dataclass
class VerificationReport:
    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, ok: bool, witness: Any = None) -> bool:
        """Record a pass/fail check.  Failures must supply a witness."""
        self.checks.append(Check(name, "pass" if ok else "fail", witness))
        return ok

    def skip(self, name: str, reason: str) -> None:
        self.checks.append(Check(name, "skip", {"reason": reason}))

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.witness))

    @property
    def summary(self) -> dict[str, int]:
        counts = {s: 0 for s in STATUSES}
        for c in self.checks:
            counts[c.status] += 1
        counts["total"] = len(self.checks)
        return counts

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    def to_dict(self) -> dict[str, Any]:
        checks = sorted(self.checks, key=lambda c: c.name)
        out: dict[str, Any] = {
            "schema": SCHEMA,
            "command": self.command,
            "parameters": self.parameters,
            "checks": [{"name": c.name, "status": c.status, "witness": c.witness} for c in checks],
            "summary": self.summary,
        }
        if self.data:
            out["data"] = self.data
        return out

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False, sort_keys=False)

    @classmethod
    def from_dict(cls, payload: dict[str, Any]) -> "VerificationReport":
        if payload.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {payload.get('schema')!r}")
        report = cls(
            command=payload["command"],
            parameters=dict(payload.get("parameters", {})),
            checks=[Check(c["name"], c["status"], c.get("witness")) for c in payload["checks"]],
            data=dict(payload.get("data", {})),
        )
        if report.summary != payload["summary"]:
            raise ValueError("summary counts disagree with the checks")
        return report

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))
