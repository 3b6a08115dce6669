"""
Weight functions kappa and their validation against the growth hypotheses:
H1 nondecreasing and unbounded, H2 doubling, H3 kappa(r)/log(4+r) nonincreasing.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np

logger = logging.getLogger(__name__)


class KappaFamily(Enum):
    POWER_LOG = "power-log"
    DATA_ADAPTED = "data-adapted"
    PIECEWISE_TABLE = "piecewise-table"
    DEGENERATE_CONSTANT = "degenerate-constant"


@dataclass(frozen=True)
class PowerLogEvaluator:
    a: float

    def __call__(self, r: np.ndarray) -> np.ndarray:
        return np.log(4.0 + np.asarray(r, dtype=float)) ** self.a


@dataclass(frozen=True)
class ConstantEvaluator:
    value: float

    def __call__(self, r: np.ndarray) -> np.ndarray:
        return np.full(np.shape(r), self.value, dtype=float)


@dataclass(frozen=True)
class TableEvaluator:
    """Linear interpolation in log(4 + r), constant extrapolation on the left, linear on the right."""
    r_nodes: Tuple[float, ...]
    values: Tuple[float, ...]

    def __call__(self, r: np.ndarray) -> np.ndarray:
        x = np.log(4.0 + np.asarray(r, dtype=float))
        xp = np.log(4.0 + np.asarray(self.r_nodes))
        fp = np.asarray(self.values)
        out = np.interp(x, xp, fp)
        if len(xp) >= 2:
            right = x > xp[-1]
            slope = (fp[-1] - fp[-2]) / (xp[-1] - xp[-2])
            out = np.where(right, fp[-1] + slope * (x - xp[-1]), out)
        return out


@dataclass(frozen=True)
class Kappa:
    """A weight r -> kappa(r) >= 1 with its family tag and parameters."""
    evaluator: Callable[[np.ndarray], np.ndarray]
    family: KappaFamily
    params: Tuple[Tuple[str, Any], ...] = ()

    def __call__(self, r) -> np.ndarray:
        return np.asarray(self.evaluator(np.asarray(r, dtype=float)), dtype=float)

    def param(self, name: str, default: Any = None) -> Any:
        return dict(self.params).get(name, default)

    @property
    def label(self) -> str:
        if self.family is KappaFamily.POWER_LOG:
            return f"power-log(a={self.param('a'):g})"
        if self.family is KappaFamily.DEGENERATE_CONSTANT:
            return f"constant({self.param('value'):g})"
        return self.family.value

    def __str__(self) -> str:
        return f"Kappa({self.label})"


def kappa_power_log(a: float) -> Kappa:
    """
    kappa_a(r) = log(4 + r)^a.

    Raises:
        ValueError: if a is outside [0, 1]
    """
    a = float(a)
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"a must lie in [0, 1], got {a}")
    return Kappa(PowerLogEvaluator(a), KappaFamily.POWER_LOG, (("a", a),))


def degenerate_constant_kappa(value: float = 1.0) -> Kappa:
    """kappa identically equal to value; fails H1 and is only usable with an explicit opt-in."""
    if value < 1.0:
        raise ValueError(f"constant weight must be at least 1, got {value}")
    return Kappa(ConstantEvaluator(float(value)), KappaFamily.DEGENERATE_CONSTANT, (("value", float(value)),))


def kappa_from_table(r_nodes, values) -> Kappa:
    """Piecewise weight through (r, kappa) nodes, linear in log(4 + r)."""
    r_nodes = tuple(float(r) for r in r_nodes)
    values = tuple(float(v) for v in values)
    if len(r_nodes) != len(values) or len(r_nodes) < 2:
        raise ValueError("a table weight needs at least two (r, value) nodes of equal count")
    if any(b <= a for a, b in zip(r_nodes, r_nodes[1:])) or r_nodes[0] < 0:
        raise ValueError("table nodes must be nonnegative and strictly increasing")
    if min(values) < 1.0:
        raise ValueError("table values must be at least 1")
    return Kappa(TableEvaluator(r_nodes, values), KappaFamily.PIECEWISE_TABLE,
                 (("r_nodes", r_nodes), ("values", values)))


@dataclass(frozen=True)
class KappaSampleSpec:
    """Log-spaced sample grid r in {0} U [r_min, r_max] used by validate_kappa."""
    r_min: float = 1e-3
    r_max: float = 1e9
    nodes_per_decade: int = 32

    def samples(self) -> np.ndarray:
        decades = np.log10(self.r_max / self.r_min)
        count = int(np.ceil(decades * self.nodes_per_decade)) + 1
        return np.concatenate(([0.0], np.logspace(np.log10(self.r_min), np.log10(self.r_max), count)))


@dataclass
class KappaValidationReport:
    """Outcome of sampling the growth hypotheses on a weight."""
    kappa_label: str
    h1_pass: bool
    h1_worst_r: Optional[float]
    h2_c0: float
    h2_worst_r: float
    h3_pass: bool
    h3_worst_r: Optional[float]
    lower_bound_pass: bool
    details: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.h1_pass and self.h3_pass and self.lower_bound_pass and np.isfinite(self.h2_c0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kappa": self.kappa_label,
            "passed": self.passed,
            "h1": {"pass": self.h1_pass, "worst_r": self.h1_worst_r},
            "h2": {"c0": self.h2_c0, "worst_r": self.h2_worst_r},
            "h3": {"pass": self.h3_pass, "worst_r": self.h3_worst_r},
            "kappa_at_least_one": self.lower_bound_pass,
            "details": dict(self.details),
        }


def validate_kappa(kappa: Kappa, sample: Optional[KappaSampleSpec] = None,
                   rel_tol: float = 1e-12) -> KappaValidationReport:
    """
    Check H1-H3 and kappa >= 1 on a sample grid.

    Violations are report content; nothing is raised.
    """
    sample = sample or KappaSampleSpec()
    r = sample.samples()
    values = kappa(r)

    # H1: nondecreasing and growing without bound (proxied by strict growth across the sample range)
    drops = values[:-1] - values[1:] * (1.0 + rel_tol)
    monotone = bool(np.all(drops <= 0.0))
    grows = bool(values[-1] > values[0] * (1.0 + 1e-9))
    h1_worst = None
    if not monotone:
        h1_worst = float(r[int(np.argmax(drops))])
    elif not grows:
        h1_worst = float(r[-1])

    # H2: empirical doubling constant
    doubling = kappa(2.0 * r) / values
    worst = int(np.argmax(doubling))

    # H3: kappa / log(4 + r) nonincreasing
    ratio = values / np.log(4.0 + r)
    rises = ratio[1:] - ratio[:-1] * (1.0 + rel_tol)
    h3_pass = bool(np.all(rises <= 0.0))
    h3_worst = None if h3_pass else float(r[1 + int(np.argmax(rises))])

    report = KappaValidationReport(
        kappa_label=kappa.label,
        h1_pass=monotone and grows,
        h1_worst_r=h1_worst,
        h2_c0=float(doubling[worst]),
        h2_worst_r=float(r[worst]),
        h3_pass=h3_pass,
        h3_worst_r=h3_worst,
        lower_bound_pass=bool(np.all(values >= 1.0 - rel_tol)),
        details={
            "kappa_min": float(np.min(values)),
            "kappa_max": float(np.max(values)),
            "h3_ratio_min": float(np.min(ratio)),
            "h3_ratio_max": float(np.max(ratio)),
            "sample_count": float(r.size),
        },
    )
    logger.debug("validated %s: passed=%s c0=%.6g", kappa, report.passed, report.h2_c0)
    return report
