"""
Hardy's inequality int (alpha^-1 int_0^alpha u)^2 d alpha <= 4 int u^2 by adaptive quadrature.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from ..utils.quadrature import adaptive_integral

logger = logging.getLogger(__name__)

HARDY_CONSTANT = 4.0


@dataclass(frozen=True)
class HardyResult:
    """rhs includes the constant 4; constant is lhs / int u^2 (at most 4)."""
    lhs: float
    rhs: float

    @property
    def excluded(self) -> bool:
        return not self.rhs > 0

    @property
    def ratio(self) -> float:
        return math.nan if self.excluded else self.lhs / self.rhs

    @property
    def constant(self) -> float:
        return math.nan if self.excluded else HARDY_CONSTANT * self.lhs / self.rhs


def _integrate_half_line(func: Callable[[float], float], breakpoints: Sequence[float]) -> float:
    """int_0^inf func, split at the breakpoints; the last segment runs to infinity."""
    edges = [0.0] + sorted(b for b in breakpoints if b > 0)
    if len(edges) == 1:
        edges.append(1.0)
    total = 0.0
    for lower, upper in zip(edges[:-1], edges[1:]):
        total += adaptive_integral(func, lower, upper, epsabs=1e-12, epsrel=1e-10)
    total += adaptive_integral(func, edges[-1], np.inf, epsabs=1e-12, epsrel=1e-10)
    return total


def check_hardy(u: Callable[[float], float], breakpoints: Optional[Sequence[float]] = None) -> HardyResult:
    """
    Both sides of Hardy's inequality for a nonnegative u on (0, inf).

    Args:
        u: scalar evaluator
        breakpoints: points where u is not smooth, used to split the quadratures
    """
    breakpoints = tuple(breakpoints or ())

    def primitive(alpha: float) -> float:
        # decade points keep the mass near 0 visible when alpha is huge
        decades = [10.0 ** j for j in range(int(math.floor(math.log10(alpha))) + 1)] if alpha > 1.0 else []
        inside = sorted({b for b in breakpoints if 0 < b < alpha} | {d for d in decades if d < alpha})
        return adaptive_integral(u, 0.0, alpha, epsabs=1e-12, epsrel=1e-10, points=inside or None)

    def averaged_squared(alpha: float) -> float:
        return (primitive(alpha) / alpha) ** 2 if alpha > 0 else 0.0

    rhs = HARDY_CONSTANT * _integrate_half_line(lambda a: u(a) ** 2, breakpoints)
    lhs = _integrate_half_line(averaged_squared, breakpoints) if rhs > 0 else 0.0
    result = HardyResult(lhs, rhs)
    logger.debug("hardy: lhs=%.10g rhs=%.10g", lhs, rhs)
    return result
