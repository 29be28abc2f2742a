"""Check reports and their line-delimited JSON serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Optional

PASS = "pass"
FAIL = "fail"
XFAIL = "xfail"  # declared expected-fail row that failed as declared
XPASS = "xpass"  # declared expected-fail row that unexpectedly passed


@dataclass(frozen=True)
class Witness:
    """First failing position of a check.

    For coefficient comparisons ``expected`` and ``actual`` are the left and
    right coefficients; for congruence claims they are the required residue
    and the residue found.
    """

    index: int
    expected: int
    actual: int


@dataclass(frozen=True)
class CheckReport:
    id: str = ""
    status: str = PASS
    order: int = 0
    witness: Optional[Witness] = None
    citation: str = ""
    detail: str = ""
    millis: Optional[float] = field(default=None, compare=False)

    def __post_init__(self):
        if self.status in (FAIL, XFAIL) and self.witness is None:
            raise ValueError(f"failing report {self.id!r} must carry a witness")

    @property
    def passed(self) -> bool:
        """True when the underlying comparison held."""
        return self.status in (PASS, XPASS)

    @property
    def ok(self) -> bool:
        """True when the outcome is the declared one (pass, or expected fail)."""
        return self.status in (PASS, XFAIL)

    def __bool__(self) -> bool:
        return self.passed

    def with_meta(self, **changes) -> "CheckReport":
        return replace(self, **changes)

    def to_record(self, timings: bool = False) -> dict:
        rec = {
            "id": self.id,
            "citation": self.citation,
            "status": self.status,
            "order": self.order,
            "millis": round(self.millis, 3) if timings and self.millis is not None else None,
        }
        if self.witness is not None:
            rec["witness"] = {
                "index": self.witness.index,
                "expected": self.witness.expected,
                "actual": self.witness.actual,
            }
        if self.detail:
            rec["detail"] = self.detail
        return rec

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_record(timings), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "CheckReport":
        rec = json.loads(line)
        w = rec.get("witness")
        return cls(
            id=rec["id"],
            status=rec["status"],
            order=rec["order"],
            witness=Witness(**w) if w else None,
            citation=rec.get("citation", ""),
            detail=rec.get("detail", ""),
            millis=rec.get("millis"),
        )

    def to_text(self) -> str:
        line = f"{self.status.upper():5s} {self.id} (order {self.order})"
        if self.witness is not None:
            w = self.witness
            line += f" witness: index {w.index}, expected {w.expected}, got {w.actual}"
        if self.detail:
            line += f" [{self.detail}]"
        return line
