"""
The small-data regime: the smallness condition on f0, the absorption
inequality between the energy terms, and dissipation bookkeeping.
"""
import math
from typing import NamedTuple

import numpy as np
from scipy import integrate, optimize

from ..norms import log_weighted_seminorm
from ..spectral import GridFunction
from .energy import EnergyRecord, EnergyTrace

SMALLNESS_ORDER = 1.5
SMALLNESS_LOG_POWER = 1.0 / 3.0
DEFAULT_C0 = 0.05


class SmallnessResult(NamedTuple):
    passed: bool
    margin: float


def smallness_value(f0: GridFunction) -> float:
    """||f0||_{3/2,1/3} (||f0||_{L2}^2 + 1)."""
    seminorm = log_weighted_seminorm(f0, SMALLNESS_ORDER, SMALLNESS_LOG_POWER)
    return seminorm * (f0.l2_norm() ** 2 + 1.0)


def smallness_check(f0: GridFunction, c0: float = DEFAULT_C0) -> SmallnessResult:
    if not c0 > 0:
        raise ValueError(f"c0 must be positive, got {c0}")
    margin = c0 - smallness_value(f0)
    return SmallnessResult(margin >= 0, margin)


def smallness_threshold(f: GridFunction, c0: float = DEFAULT_C0, xtol: float = 1e-14) -> float:
    """
    The amplitude eps at which eps * f crosses the smallness condition.

    The left side is eps N (eps^2 ||f||^2 + 1) with N the seminorm of f, which
    increases strictly in eps, so the crossing is bracketed and found by Brent's method.

    Raises:
        ValueError: if f has zero seminorm (every multiple passes)
    """
    seminorm = log_weighted_seminorm(f, SMALLNESS_ORDER, SMALLNESS_LOG_POWER)
    if seminorm == 0:
        raise ValueError("f has zero smallness seminorm; no crossing exists")
    upper = c0 / seminorm

    def excess(eps: float) -> float:
        return smallness_value(f * eps) - c0

    return float(optimize.brentq(excess, 0.0, upper, xtol=xtol))


def absorption_threshold(C1: float, C2: float) -> float:
    """c = C1 / (8 (C1 + C2))."""
    return C1 / (8.0 * (C1 + C2))


def absorption_margin(record: EnergyRecord, f0_l2: float, C1: float, C2: float) -> float:
    """C1/2 - C2 (sqrt(A) + A)(A + ||f0||^2 + 1); nonnegative is sufficient for absorption."""
    A = record.A
    return 0.5 * C1 - C2 * (math.sqrt(A) + A) * (A + f0_l2 ** 2 + 1.0)


def absorption_gap(record: EnergyRecord, f0_l2: float, C1: float, C2: float) -> float:
    """
    Right minus left side of the absorption inequality
    C2 X lambda^-1 <= (C1/2) / (1 + lambda Y), X = sqrt(A) + A, Y = A + ||f0||^2,
    lambda = log(4 + B/Y)^(1/3).
    """
    A, B = record.A, record.B
    mass = A + f0_l2 ** 2
    lam = math.log(4.0 + (B / mass if mass > 0 else 0.0)) ** (1.0 / 3.0)
    return 0.5 * C1 / (1.0 + lam * mass) - C2 * (math.sqrt(A) + A) / lam


def dissipation_integral(trace: EnergyTrace) -> float:
    """Trapezoidal int delta B dt over the records."""
    if len(trace) < 2:
        return 0.0
    return float(integrate.trapezoid(trace.column("delta") * trace.column("B"), trace.column("t")))


def dissipation_bound(A0: float, C1: float) -> float:
    """(2 / C1) A(0), the bound on int delta B dt once the right side is absorbed."""
    if not C1 > 0:
        raise ValueError(f"C1 must be positive, got {C1}")
    return 2.0 * A0 / C1


def is_nonincreasing(values: np.ndarray, tolerance: float) -> bool:
    """Every consecutive increase is at most tolerance."""
    values = np.asarray(values, dtype=float)
    return bool(np.all(np.diff(values) <= tolerance))
