# cyinertia/models.py
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Tuple

if TYPE_CHECKING:
    from .geometry.points import Point

DEFAULT_PRIME = 2147483647


@dataclass
class SamplerConfig:
    """Configuration for fiber point sampling"""

    max_attempts: int = 1000


@dataclass
class GenerationConfig:
    """Configuration for random hypersurface generation"""

    coeff_bound: int = 20
    denominator_bound: int = 1
    max_attempts: int = 200


@dataclass
class CertifyConfig:
    """Configuration shared by the certificate routines"""

    default_prime: int = DEFAULT_PRIME
    trials: int = 100
    k_max: int = 8
    lift: str = "tau"
    sampler: SamplerConfig = field(default_factory=SamplerConfig)


class Status(str, Enum):
    VERIFIED = "VERIFIED"
    REFUTED = "REFUTED"
    INCONCLUSIVE = "INCONCLUSIVE"

    @property
    def exit_code(self) -> int:
        return {"VERIFIED": 0, "REFUTED": 1, "INCONCLUSIVE": 2}[self.value]


@dataclass(frozen=True)
class Witness:
    """A replayable point: the trial it came from and the map's action on it"""

    trial: int
    before: Point
    after: Optional[Point] = None

    def to_record(self) -> Dict[str, Any]:
        return {
            "trial": self.trial,
            "before": self.before.format(),
            "after": self.after.format() if self.after is not None else None,
        }


@dataclass(frozen=True)
class Verdict:
    """Outcome of a certificate run"""

    status: Status
    claim: str
    seed: Optional[int] = None
    trials_used: int = 0
    indeterminate_hits: int = 0
    witness: Optional[Witness] = None
    detail: str = ""
    word: Optional[str] = None
    axis: Optional[int] = None
    offending_k: Optional[int] = None

    @property
    def exit_code(self) -> int:
        return self.status.exit_code

    def to_record(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "claim": self.claim,
            "seed": self.seed,
            "trials_used": self.trials_used,
            "indeterminate_hits": self.indeterminate_hits,
            "witness": self.witness.to_record() if self.witness else None,
            "detail": self.detail,
            "word": self.word,
            "axis": self.axis,
            "offending_k": self.offending_k,
        }

    def format(self) -> str:
        lines = [
            f"claim: {self.claim}",
            f"status: {self.status.value}",
            f"seed: {self.seed}",
            f"trials used: {self.trials_used}",
            f"indeterminate hits: {self.indeterminate_hits}",
        ]
        if self.axis is not None:
            lines.append(f"axis: {self.axis}")
        if self.word is not None:
            lines.append(f"word: {self.word}")
        if self.offending_k is not None:
            lines.append(f"offending k: {self.offending_k}")
        if self.witness is not None:
            after = self.witness.after.format() if self.witness.after else "-"
            lines.append(
                f"witness: trial {self.witness.trial}: "
                f"{self.witness.before.format()} -> {after}"
            )
        if self.detail:
            lines.append(f"detail: {self.detail}")
        return "\n".join(lines)


@dataclass(frozen=True)
class AxisGenericity:
    """Genericity flags of one axis decomposition"""

    axis: int
    discriminant_vanishes: bool
    vanishing_parts: Tuple[int, ...] = ()

    @property
    def passed(self) -> bool:
        return (
            not self.discriminant_vanishes
            and 0 not in self.vanishing_parts
            and 2 not in self.vanishing_parts
        )


@dataclass(frozen=True)
class GenericityReport:
    """Proxy genericity check over every axis"""

    axes: Tuple[AxisGenericity, ...]

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.axes)

    @property
    def failures(self) -> List[str]:
        messages = []
        for a in self.axes:
            if a.discriminant_vanishes:
                messages.append(f"axis {a.axis}: discriminant vanishes identically")
            for j in a.vanishing_parts:
                messages.append(f"axis {a.axis}: F_{a.axis},{j} vanishes identically")
        return messages

    def format(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return "\n".join([f"genericity: {verdict}"] + self.failures)


@dataclass(frozen=True)
class FiberPeriodReport:
    """Periods of rho_i on sampled numeric fibers over F_p"""

    axis: int
    k_max: int
    periods: Tuple[int, ...] = ()
    skipped: int = 0

    @property
    def min_period(self) -> Optional[int]:
        return min(self.periods) if self.periods else None

    @property
    def short_fibers(self) -> int:
        """Fibers on which rho_i has period at most k_max."""
        return sum(1 for p in self.periods if p <= self.k_max)
