"""
LHS/RHS ratio statistics for an inequality over a sample set.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Tuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RatioSample:
    lhs: float
    rhs: float

    @property
    def ratio(self) -> float:
        return self.lhs / self.rhs


@dataclass
class RatioReport:
    """
    Retained samples have a positive finite right-hand side; the others are
    counted in excluded and dropped.
    """
    identifier: str
    samples: List[RatioSample] = field(default_factory=list)
    excluded: int = 0
    ensemble: Dict[str, Any] = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.samples)

    @property
    def ratios(self) -> List[float]:
        return [s.ratio for s in self.samples]

    @property
    def max_ratio(self) -> float:
        return max(self.ratios) if self.samples else 0.0

    @property
    def min_ratio(self) -> float:
        return min(self.ratios) if self.samples else 0.0

    @property
    def mean_ratio(self) -> float:
        return math.fsum(self.ratios) / self.count if self.samples else 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identifier": self.identifier,
            "ensemble": dict(self.ensemble),
            "count": self.count,
            "excluded": self.excluded,
            "max_ratio": self.max_ratio,
            "min_ratio": self.min_ratio,
            "mean_ratio": self.mean_ratio,
            "samples": [[s.lhs, s.rhs, s.ratio] for s in self.samples],
        }


def build_ratio_report(identifier: str, pairs: Iterable[Tuple[float, float]],
                       ensemble: Dict[str, Any]) -> RatioReport:
    report = RatioReport(identifier=identifier, ensemble=dict(ensemble))
    for lhs, rhs in pairs:
        if not (math.isfinite(rhs) and rhs > 0):
            report.excluded += 1
            continue
        report.samples.append(RatioSample(float(lhs), float(rhs)))
    logger.info("%s: %d samples (%d excluded), max ratio %.4g", identifier, report.count,
                report.excluded, report.max_ratio)
    return report
