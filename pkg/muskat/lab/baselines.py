"""
Stored ratio baselines and drift comparison.

A baseline is recorded the first time an identifier is seen; later runs
compare against it with a relative drift tolerance.
"""
import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional

from .ratio_report import RatioReport

logger = logging.getLogger(__name__)

DEFAULT_DRIFT = 0.10
BASELINES_ENV = "MUSKAT_BASELINES"


@dataclass(frozen=True)
class DriftResult:
    identifier: str
    statistic: str
    stored: Optional[float]
    observed: float
    drift: float
    recorded: bool
    tolerance: float = DEFAULT_DRIFT

    @property
    def passed(self) -> bool:
        return self.recorded or self.drift <= self.tolerance

    def to_dict(self) -> Dict[str, object]:
        return {"identifier": self.identifier, "statistic": self.statistic, "stored": self.stored,
                "observed": self.observed, "drift": self.drift, "recorded": self.recorded,
                "passed": self.passed}


def _relative_drift(stored: float, observed: float) -> float:
    if stored == observed:
        return 0.0
    scale = max(abs(stored), abs(observed))
    return abs(observed - stored) / scale


class BaselineStore:
    """Baselines as a JSON document {identifier: {statistic: value}}."""

    def __init__(self, path: Path, drift: float = DEFAULT_DRIFT):
        self.path = Path(path)
        self.drift = drift
        self.entries: Dict[str, Dict[str, float]] = {}
        if self.path.exists():
            with open(self.path, 'r', encoding='utf-8') as f:
                self.entries = json.load(f)

    @classmethod
    def from_env(cls, default: Path) -> "BaselineStore":
        return cls(Path(os.getenv(BASELINES_ENV, str(default))))

    def compare(self, report: RatioReport, statistics=("max_ratio",)) -> List[DriftResult]:
        """Compare (or record) the given statistics of a report."""
        return self.compare_values(report.identifier, {name: float(getattr(report, name)) for name in statistics})

    def compare_values(self, identifier: str, values: Dict[str, float]) -> List[DriftResult]:
        results = []
        stored_entry = self.entries.setdefault(identifier, {})
        for name, observed in values.items():
            stored = stored_entry.get(name)
            if stored is None:
                stored_entry[name] = observed
                results.append(DriftResult(identifier, name, None, observed, 0.0, True, self.drift))
                logger.info("recorded baseline %s.%s = %.6g", identifier, name, observed)
                continue
            drift = _relative_drift(float(stored), observed)
            if drift > self.drift:
                logger.warning("baseline drift %s.%s: stored %.6g observed %.6g (%.1f%%)",
                               identifier, name, stored, observed, 100.0 * drift)
            results.append(DriftResult(identifier, name, float(stored), observed, drift, False, self.drift))
        return results

    def save(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, 'w', encoding='utf-8') as f:
            json.dump(self.entries, f, indent=2, sort_keys=True)
