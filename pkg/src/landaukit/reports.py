"""Three-valued verdicts and sweep reports.

A verdict is the only honest outcome of a finite-precision sign
question: proven positive, proven negative, or unresolved at the
precision that was allowed. Reports pair each swept point with the
verdict it received and with whether that verdict matched the expected
one, so a failed expectation is data, never a dropped exception.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping


class Verdict(enum.Enum):
    PROVEN_POSITIVE = "ProvenPositive"
    PROVEN_NEGATIVE = "ProvenNegative"
    INCONCLUSIVE = "Inconclusive"


# precision_bits marker for verdicts reached by exact rational arithmetic
EXACT = 0


@dataclass(frozen=True)
class PointVerdict:
    """One swept point: where, what was concluded, at what precision."""

    point: tuple
    verdict: Verdict
    precision_bits: int
    ok: bool
    detail: str | None = None

    def to_dict(self) -> dict:
        out = {
            "point": list(self.point),
            "verdict": self.verdict.value,
            "precision_bits": self.precision_bits,
            "ok": self.ok,
        }
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def exact_sign_point(point: tuple, value: Fraction, expect_positive: bool,
                     detail: str | None = None) -> PointVerdict:
    """PointVerdict for an exact rational that must be strictly signed."""
    if value > 0:
        verdict = Verdict.PROVEN_POSITIVE
    elif value < 0:
        verdict = Verdict.PROVEN_NEGATIVE
    else:
        # an exact zero refutes a strict inequality; it cannot be "proven"
        verdict = Verdict.INCONCLUSIVE
        detail = detail or "exactly zero"
    ok = verdict is (Verdict.PROVEN_POSITIVE if expect_positive
                     else Verdict.PROVEN_NEGATIVE)
    return PointVerdict(point, verdict, EXACT, ok, detail)


def exact_equal_point(point: tuple, got, want) -> PointVerdict:
    """PointVerdict for an exact equality check."""
    if got == want:
        return PointVerdict(point, Verdict.PROVEN_POSITIVE, EXACT, True)
    return PointVerdict(point, Verdict.PROVEN_NEGATIVE, EXACT, False,
                        detail=f"got {got}, want {want}")


@dataclass(frozen=True)
class VerificationReport:
    """Aggregated outcome of one claim swept over a parameter grid."""

    claim_id: str
    sweep: Mapping[str, object]
    verdicts: tuple[PointVerdict, ...]
    warnings: tuple[str, ...] = ()

    @property
    def counterexamples(self) -> tuple[PointVerdict, ...]:
        return tuple(v for v in self.verdicts
                     if not v.ok and v.verdict is not Verdict.INCONCLUSIVE)

    @property
    def inconclusive(self) -> tuple[PointVerdict, ...]:
        return tuple(v for v in self.verdicts
                     if v.verdict is Verdict.INCONCLUSIVE)

    @property
    def all_proven(self) -> bool:
        return all(v.ok for v in self.verdicts)

    @property
    def max_precision_bits(self) -> int:
        return max((v.precision_bits for v in self.verdicts), default=EXACT)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Combine two reports on the same claim; associative by construction."""
        if other.claim_id != self.claim_id:
            raise ValueError(
                f"cannot merge {other.claim_id!r} into {self.claim_id!r}")
        sweep: dict[str, object] = dict(self.sweep)
        for key, value in other.sweep.items():
            if key in sweep and sweep[key] != value:
                sweep[key] = f"{sweep[key]};{value}"
            else:
                sweep[key] = value
        return VerificationReport(
            claim_id=self.claim_id,
            sweep=sweep,
            verdicts=self.verdicts + other.verdicts,
            warnings=self.warnings + other.warnings,
        )

    def to_dict(self, include_points: bool = False) -> dict:
        out = {
            "claim_id": self.claim_id,
            "sweep": {k: str(v) for k, v in sorted(self.sweep.items())},
            "summary": {
                "points": len(self.verdicts),
                "proven": sum(1 for v in self.verdicts if v.ok),
                "all_proven": self.all_proven,
                "max_precision_bits": self.max_precision_bits,
                "counterexamples": [v.to_dict() for v in self.counterexamples],
                "inconclusive": [v.to_dict() for v in self.inconclusive],
            },
            "warnings": list(self.warnings),
        }
        if include_points:
            out["points"] = [v.to_dict() for v in self.verdicts]
        return out
