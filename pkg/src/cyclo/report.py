"""Verification reports and their text/JSON renderings."""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Tuple

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"


def render_value(value) -> str:
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(value)


@dataclass(frozen=True, order=True)
class Counterexample:
    params: Tuple[int, ...]
    lhs: str
    rhs: str

    def to_dict(self) -> dict:
        return {"params": list(self.params), "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerificationReport:
    claim_id: str
    range: str
    status: str
    counterexamples: List[Counterexample] = field(default_factory=list)
    elapsed_ms: int = 0
    checked: int = 0
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        self.counterexamples = sorted(self.counterexamples)
        if (self.status == FAIL) != bool(self.counterexamples):
            raise ValueError("status must be 'fail' exactly when counterexamples are present")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @classmethod
    def single(cls, claim_id: str, params: Tuple[int, ...], lhs, rhs, ok: bool) -> "VerificationReport":
        rng = ",".join(str(p) for p in params)
        if ok:
            return cls(claim_id, rng, PASS, checked=1)
        ce = Counterexample(tuple(params), render_value(lhs), render_value(rhs))
        return cls(claim_id, rng, FAIL, [ce], checked=1)

    @classmethod
    def not_applicable(cls, claim_id: str, params: Tuple[int, ...], note: str) -> "VerificationReport":
        return cls(claim_id, ",".join(str(p) for p in params), NOT_APPLICABLE, notes=[note])

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "range": self.range,
            "status": self.status,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "elapsed_ms": self.elapsed_ms,
            "checked": self.checked,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        return cls(
            data["claim_id"],
            data["range"],
            data["status"],
            [Counterexample(tuple(c["params"]), c["lhs"], c["rhs"]) for c in data["counterexamples"]],
            data["elapsed_ms"],
            data.get("checked", 0),
            list(data.get("notes", [])),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self, max_counterexamples: int = 10) -> str:
        lines = [
            f"{self.claim_id}: {self.status.upper()}  [{self.range}]  "
            f"checked={self.checked}  {self.elapsed_ms} ms"
        ]
        for ce in self.counterexamples[:max_counterexamples]:
            lines.append(f"  counterexample {ce.params}: lhs={ce.lhs} rhs={ce.rhs}")
        if len(self.counterexamples) > max_counterexamples:
            lines.append(f"  ... {len(self.counterexamples) - max_counterexamples} more")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


def merge(claim_id: str, range_text: str, parts: Iterable[VerificationReport], elapsed_ms: int = 0) -> VerificationReport:
    """Combine single-case reports into one sweep report."""
    ces: List[Counterexample] = []
    notes: List[str] = []
    checked = 0
    for part in parts:
        ces.extend(part.counterexamples)
        notes.extend(part.notes)
        checked += part.checked
    if ces:
        status = FAIL
    elif checked:
        status = PASS
    else:
        status = NOT_APPLICABLE
    return VerificationReport(claim_id, range_text, status, ces, elapsed_ms, checked, notes)
