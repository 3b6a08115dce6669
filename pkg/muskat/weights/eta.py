"""
Slowly growing weights eta adapted to an integrable weight omega.

Breakpoints alpha_k are chosen so that the tail mass of omega beyond
alpha_k is at most 2^-k, with alpha_1 >= e^5 and alpha_k >= alpha_{k-1}^10.
Between breakpoints eta interpolates linearly in log(4 + r), so that
eta(alpha_k) = k + 1 and eta = 2 below alpha_1.

Breakpoints are stored as natural logarithms. For the minimal choice alpha_3 =
e^500 still fits in a double but alpha_4 = e^5000 does not, so later stored
breakpoints sit beyond the largest representable float.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from ..errors import NotIntegrableError
from ..utils.quadrature import adaptive_integral

logger = logging.getLogger(__name__)

LOG_FLOAT_MAX = math.log(np.finfo(float).max)
FIRST_LOG_BREAKPOINT = 5.0
GROWTH_EXPONENT = 10.0


@dataclass(frozen=True)
class IntegrableWeight:
    """A nonnegative weight omega known through its tail mass int_{|r| >= alpha} omega."""
    tail_mass: Callable[[float], float]
    name: str = "omega"
    density: Optional[Callable[[float], float]] = None

    @classmethod
    def from_density(cls, density: Callable[[float], float], name: str = "omega",
                     symmetric: bool = True) -> "IntegrableWeight":
        """
        Build the tail mass of a density on [0, inf) by adaptive quadrature.

        With symmetric=True the density is taken as even on the line, so the
        two-sided tail is twice the one-sided one.
        """
        factor = 2.0 if symmetric else 1.0

        def tail(alpha: float) -> float:
            return factor * adaptive_integral(density, alpha, np.inf, epsabs=1e-14, epsrel=1e-10,
                                              accept_abserr=1e-9)

        return cls(tail_mass=tail, name=name, density=density)


def _log_four_plus(log_alpha: np.ndarray) -> np.ndarray:
    """log(4 + alpha) from log(alpha) without overflow."""
    log_alpha = np.asarray(log_alpha, dtype=float)
    return log_alpha + np.log1p(4.0 * np.exp(-log_alpha))


@dataclass(frozen=True)
class Eta:
    """Breakpoints (as logs), their tail masses, and the piecewise evaluator."""
    log_breakpoints: Tuple[float, ...]
    tail_masses: Tuple[float, ...]
    ceiling_log_breakpoint: float
    source: str = "omega"

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        """The representable breakpoints alpha_k."""
        return tuple(math.exp(t) for t in self.log_breakpoints)

    def __call__(self, r) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        logs = np.asarray(self.log_breakpoints + (self.ceiling_log_breakpoint,))
        with np.errstate(divide="ignore"):
            log_r = np.log(r)
        count = np.searchsorted(logs, log_r, side="right")
        out = np.full(r.shape, 2.0)
        above = count >= 1
        if np.any(above):
            index = np.minimum(count[above] - 1, logs.size - 2)
            u_lower = _log_four_plus(logs[index])
            u_upper = _log_four_plus(logs[index + 1])
            fraction = (np.log(4.0 + r[above]) - u_lower) / (u_upper - u_lower)
            out[above] = index + 2.0 + fraction
        return out


def build_eta(omega: IntegrableWeight, search_budget: int = 4096, mesh_ratio: float = 2.0) -> Eta:
    """
    Choose the breakpoints of eta for omega.

    alpha_k is the first point of the geometric mesh lower_k * mesh_ratio^j
    (lower_1 = e^5, lower_k = alpha_{k-1}^10) whose tail mass is at most 2^-k.

    Raises:
        NotIntegrableError: if the tail mass stays above 2^-k within the search budget
            or beyond the range of doubles
    """
    if mesh_ratio <= 1.0:
        raise ValueError(f"mesh_ratio must exceed 1, got {mesh_ratio}")
    step = math.log(mesh_ratio)
    log_breakpoints = []
    tails = []
    lower = FIRST_LOG_BREAKPOINT
    k = 1
    while lower <= LOG_FLOAT_MAX:
        threshold = 2.0 ** (-k)
        chosen = None
        for j in range(search_budget):
            log_alpha = lower + j * step
            if log_alpha > LOG_FLOAT_MAX:
                break
            tail = float(omega.tail_mass(math.exp(log_alpha)))
            if tail <= threshold:
                chosen = (log_alpha, tail)
                break
        if chosen is None:
            raise NotIntegrableError(
                f"tail mass of {omega.name} does not fall below 2^-{k} within the search budget")
        log_breakpoints.append(chosen[0])
        tails.append(chosen[1])
        logger.debug("eta breakpoint %d: log(alpha)=%.6g tail=%.3g", k, chosen[0], chosen[1])
        lower = GROWTH_EXPONENT * chosen[0]
        k += 1

    return Eta(tuple(log_breakpoints), tuple(tails), ceiling_log_breakpoint=lower, source=omega.name)
