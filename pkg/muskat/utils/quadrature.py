"""
Adaptive quadrature helpers around scipy.integrate.quad.
"""
import logging
from typing import Callable, Optional

import numpy as np
from scipy import integrate

from ..errors import ConvergenceError

logger = logging.getLogger(__name__)


def adaptive_integral(func: Callable[[float], float], a: float, b: float,
                      epsabs: float = 1e-12, epsrel: float = 1e-12, limit: int = 200,
                      weight: Optional[str] = None, wvar=None,
                      accept_abserr: Optional[float] = None, points=None) -> float:
    """
    Integrate func over [a, b] with QUADPACK.

    QUADPACK's own warnings are turned into a ConvergenceError only when the
    reported error estimate exceeds accept_abserr (default: 1e3 * epsabs plus
    1e-8 relative). points are interior breakpoints for finite ranges.

    Raises:
        ConvergenceError: if the integral did not converge
    """
    kwargs = {"epsabs": epsabs, "epsrel": epsrel, "limit": limit, "full_output": 1}
    if weight is not None:
        kwargs["weight"] = weight
        kwargs["wvar"] = wvar
    if points:
        kwargs["points"] = points
    result = integrate.quad(func, a, b, **kwargs)
    value, abserr = float(result[0]), float(result[1])
    if not np.isfinite(value):
        raise ConvergenceError(f"quadrature on [{a}, {b}] returned {value}")
    if len(result) > 3:
        threshold = accept_abserr if accept_abserr is not None else 1e3 * epsabs + 1e-8 * abs(value)
        if abserr > threshold:
            raise ConvergenceError(f"quadrature on [{a}, {b}] did not converge: {result[3]} (abserr={abserr:.3g})")
        logger.debug("quadrature on [%s, %s] flagged but accepted (abserr=%.3g)", a, b, abserr)
    return value


def one_minus_cos_over_square(h):
    """(1 - cos h) / h^2 written as 0.5 * sinc^2, with the removable value 1/2 at 0."""
    return 0.5 * np.sinc(np.asarray(h) / (2.0 * np.pi)) ** 2


def log_gauss_legendre(lower: float, upper: float, nodes_per_decade: int,
                       points_per_panel: int = 8):
    """
    Nodes and weights for int_lower^upper g(h) dh / h.

    Composite Gauss-Legendre in t = log h on panels of equal log width, with
    enough panels to reach nodes_per_decade. Nodes are returned ascending.

    Raises:
        ValueError: if the range is empty or the densities are not positive
    """
    if not 0.0 < lower < upper:
        raise ValueError(f"need 0 < lower < upper, got [{lower}, {upper}]")
    if nodes_per_decade < 1 or points_per_panel < 1:
        raise ValueError("nodes_per_decade and points_per_panel must be positive")
    decades = np.log10(upper / lower)
    panels = max(1, int(np.ceil(decades * nodes_per_decade / points_per_panel)))
    edges = np.linspace(np.log(lower), np.log(upper), panels + 1)
    reference_nodes, reference_weights = np.polynomial.legendre.leggauss(points_per_panel)
    half_widths = 0.5 * np.diff(edges)
    centers = 0.5 * (edges[:-1] + edges[1:])
    t = (centers[:, None] + half_widths[:, None] * reference_nodes[None, :]).ravel()
    weights = (half_widths[:, None] * reference_weights[None, :]).ravel()
    return np.exp(t), weights
