"""
The kappa -> phi transform

    phi(lambda) = int_0^inf (1 - cos h) / h^2 * kappa(lambda / h) dh

and its tabulation with monotone interpolation.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Tuple

import numpy as np

from ..errors import ConvergenceError, OutOfRangeError
from ..utils.quadrature import adaptive_integral, one_minus_cos_over_square
from .kappa import Kappa, validate_kappa

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-10
DEFAULT_PANEL_BUDGET = 64
DEFAULT_DENSITY = 64
DEFAULT_RANGE = (1e-3, 1e6)


def phi_from_kappa(kappa: Kappa, lam: float, tol: float = DEFAULT_TOLERANCE,
                   panel_budget: int = DEFAULT_PANEL_BUDGET) -> float:
    """
    Evaluate phi(lambda) by composite quadrature.

    The integral is split at h = 1. On [0, 1] the integrand is bounded. On
    [1, inf) the non-oscillating part int kappa(lambda/h)/h^2 dh is mapped to
    int_0^1 kappa(lambda*u) du; the cosine part is summed over geometric
    panels [2^j, 2^(j+1)] until a panel contributes less than tol times the
    running total.

    Raises:
        ValueError: if lambda is negative
        ConvergenceError: if the panel budget is exhausted
    """
    lam = float(lam)
    if not lam >= 0.0:
        raise ValueError(f"lambda must be nonnegative, got {lam}")

    def kappa_at(r: float) -> float:
        return float(kappa(r))

    near = adaptive_integral(lambda h: float(one_minus_cos_over_square(h)) * kappa_at(lam / h),
                             0.0, 1.0, epsabs=tol * 1e-2)
    smooth_tail = adaptive_integral(lambda u: kappa_at(lam * u), 0.0, 1.0, epsabs=tol * 1e-2)
    total = near + smooth_tail

    oscillating = 0.0
    lower = 1.0
    for panel in range(panel_budget):
        upper = 2.0 * lower
        contribution = adaptive_integral(lambda h: kappa_at(lam / h) / (h * h), lower, upper,
                                         epsabs=tol * 1e-2, weight="cos", wvar=1.0)
        oscillating += contribution
        if abs(contribution) < tol * abs(total - oscillating):
            logger.debug("phi(%g) converged after %d tail panels", lam, panel + 1)
            return total - oscillating
        lower = upper
    raise ConvergenceError(f"phi({lam}) tail did not converge within {panel_budget} panels")


@dataclass(frozen=True, eq=False)
class Phi:
    """
    Tabulated phi with monotone interpolation.

    Between table nodes the interpolation is linear in log(lambda); on
    [0, lambda_min] it is linear in lambda.
    """
    kappa: Kappa
    lambdas: np.ndarray
    values: np.ndarray
    density: int

    @property
    def lambda_min(self) -> float:
        return float(self.lambdas[1])

    @property
    def lambda_max(self) -> float:
        return float(self.lambdas[-1])

    @property
    def ratios(self) -> np.ndarray:
        return self.values / self.kappa(self.lambdas)

    @property
    def c_lower(self) -> float:
        """min phi/kappa over the table."""
        return float(np.min(self.ratios))

    @property
    def c_upper(self) -> float:
        """max phi/kappa over the table."""
        return float(np.max(self.ratios))

    def __call__(self, lam) -> np.ndarray:
        lam = np.asarray(lam, dtype=float)
        if np.any(lam < 0) or np.any(lam > self.lambda_max * (1.0 + 1e-12)):
            raise OutOfRangeError(
                f"phi evaluated outside its table [0, {self.lambda_max:g}] "
                f"(requested [{float(np.min(lam)):g}, {float(np.max(lam)):g}])")
        low = lam < self.lambda_min
        logs = np.log(np.maximum(lam, self.lambda_min))
        out = np.interp(logs, np.log(self.lambdas[1:]), self.values[1:])
        linear = self.values[0] + (self.values[1] - self.values[0]) * lam / self.lambda_min
        return np.where(low, linear, out)

    def doubling_constant(self) -> float:
        """max phi(2 lambda) / phi(lambda) over table nodes with 2 lambda inside the table."""
        nodes = self.lambdas[2.0 * self.lambdas <= self.lambda_max]
        return float(np.max(self(2.0 * nodes) / self(nodes)))

    def summary(self) -> Dict[str, Any]:
        return {
            "kappa": self.kappa.label,
            "lambda_range": [0.0, self.lambda_max],
            "density": self.density,
            "nodes": int(self.lambdas.size),
            "c_lower": self.c_lower,
            "c_upper": self.c_upper,
            "doubling_constant": self.doubling_constant(),
        }


def _table_nodes(lambda_min: float, lambda_max: float, density: int) -> np.ndarray:
    decades = math.log10(lambda_max / lambda_min)
    count = max(2, int(math.ceil(decades * density)) + 1)
    return np.concatenate(([0.0], np.logspace(math.log10(lambda_min), math.log10(lambda_max), count)))


@lru_cache(maxsize=32)
def _cached_table(kappa: Kappa, lambda_min: float, lambda_max: float, density: int,
                  tol: float) -> Tuple[np.ndarray, np.ndarray]:
    lambdas = _table_nodes(lambda_min, lambda_max, density)
    raw = np.array([phi_from_kappa(kappa, lam, tol=tol) for lam in lambdas])
    values = np.maximum.accumulate(raw)
    adjusted = float(np.max(values - raw))
    if adjusted > 0:
        logger.debug("phi table for %s: monotone envelope moved values by at most %.3g", kappa, adjusted)
    lambdas.setflags(write=False)
    values.setflags(write=False)
    return lambdas, values


def tabulate_phi(kappa: Kappa, lambda_range: Tuple[float, float] = DEFAULT_RANGE,
                 density: int = DEFAULT_DENSITY, allow_degenerate: bool = False,
                 tol: float = DEFAULT_TOLERANCE) -> Phi:
    """
    Tabulate phi on {0} plus a log-spaced grid over lambda_range.

    Args:
        kappa: source weight
        lambda_range: (lambda_min, lambda_max) of the log-spaced part
        density: nodes per decade
        allow_degenerate: skip the H1-H3 precondition (for constant test weights)
        tol: quadrature tolerance per node

    Raises:
        ValueError: if kappa fails validation and allow_degenerate is False
        ConvergenceError: propagated from the quadrature
    """
    lambda_min, lambda_max = (float(v) for v in lambda_range)
    if not 0 < lambda_min < lambda_max:
        raise ValueError(f"lambda_range must satisfy 0 < min < max, got {lambda_range}")
    if density < 1:
        raise ValueError(f"density must be positive, got {density}")
    if not allow_degenerate:
        report = validate_kappa(kappa)
        if not report.passed:
            raise ValueError(f"{kappa} fails the growth hypotheses: {report.to_dict()}")
    lambdas, values = _cached_table(kappa, lambda_min, lambda_max, int(density), float(tol))
    phi = Phi(kappa=kappa, lambdas=lambdas, values=values, density=int(density))
    logger.info("tabulated phi for %s on [0, %g]: c=%.4f C=%.4f", kappa, lambda_max, phi.c_lower, phi.c_upper)
    return phi
