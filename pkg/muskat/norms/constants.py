"""
The constant c(s) = int_R (1 - cos h) / |h|^(1 + 2s) dh.
"""
import math

import numpy as np

from ..utils.quadrature import adaptive_integral, one_minus_cos_over_square


def c_of_s(s: float, tol: float = 1e-10) -> float:
    """
    c(s) for 0 < s < 1.

    [0, 1] is integrated with the algebraic weight h^(1 - 2s) against the
    bounded factor (1 - cos h)/h^2; on [1, inf) the power part is exact and
    the cosine part uses QUADPACK's Fourier-integral routine.

    Raises:
        ValueError: if s is not strictly between 0 and 1
    """
    s = float(s)
    if not 0.0 < s < 1.0:
        raise ValueError(f"c(s) is defined for 0 < s < 1, got {s}")
    near = adaptive_integral(lambda h: float(one_minus_cos_over_square(h)), 0.0, 1.0,
                             epsabs=tol * 1e-2, weight="alg", wvar=(1.0 - 2.0 * s, 0.0))
    oscillating = adaptive_integral(lambda h: h ** (-1.0 - 2.0 * s), 1.0, np.inf,
                                    epsabs=tol * 1e-2, weight="cos", wvar=1.0)
    return 2.0 * (near + 1.0 / (2.0 * s) - oscillating)


def sobolev_finite_difference_constant(s: float) -> float:
    """
    Ratio ||u||^2_{F^s_{2,2}} / ||u||^2_{H^s} under Parseval normalization.

    The classical statement 4 pi c(s) refers to the seminorm carrying an
    extra 1/(2 pi); dividing it out leaves 2 c(s).
    """
    return 4.0 * math.pi * c_of_s(s) / (2.0 * math.pi)
