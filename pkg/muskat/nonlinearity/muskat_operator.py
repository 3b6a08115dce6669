"""
The Muskat nonlinearity and the pieces of its paralinearization.

Slopes Delta_alpha f = (f(x) - f(x - alpha)) / alpha are evaluated for all
quadrature nodes at once with batched inverse FFTs; the derivative of a slope
is the slope of the spectral derivative. Rows are ordered (+alpha_i) followed
by (-alpha_i), and pair sums are always formed before the weighted reduction.
"""
import logging
import math
from typing import Tuple

import numpy as np
import scipy.fft

from ..spectral import GridFunction, derivative
from .alpha_quadrature import AlphaQuadrature

logger = logging.getLogger(__name__)


def _signed_nodes(quad: AlphaQuadrature) -> np.ndarray:
    return np.concatenate([quad.nodes, -quad.nodes])


def _slopes_from_spectrum(grid, spectrum: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    k = grid.half_wavenumbers
    factors = (1.0 - np.exp(-1j * np.multiply.outer(alphas, k))) / alphas[:, None]
    return scipy.fft.irfft(spectrum[None, :] * factors, n=grid.size, axis=1)


def slopes(f: GridFunction, quad: AlphaQuadrature) -> np.ndarray:
    """Delta_alpha f at every signed node, shape (2 * pairs, N)."""
    return _slopes_from_spectrum(f.grid, f.spectrum, _signed_nodes(quad))


def slope_derivatives(g: GridFunction, quad: AlphaQuadrature) -> np.ndarray:
    """d/dx Delta_alpha g = Delta_alpha(g_x) at every signed node."""
    return _slopes_from_spectrum(g.grid, derivative(g).spectrum, _signed_nodes(quad))


def shifted_derivatives(g: GridFunction, quad: AlphaQuadrature) -> np.ndarray:
    """g_x(x - alpha) at every signed node."""
    grid = g.grid
    alphas = _signed_nodes(quad)
    factors = np.exp(-1j * np.multiply.outer(alphas, grid.half_wavenumbers))
    return scipy.fft.irfft(derivative(g).spectrum[None, :] * factors, n=grid.size, axis=1)


def _pair_reduce(rows: np.ndarray, quad: AlphaQuadrature) -> np.ndarray:
    """sum_i w_i (row(+alpha_i) + row(-alpha_i)) in node order."""
    pairs = quad.size
    paired = rows[:pairs] + rows[pairs:]
    return np.sum(quad.weights[:, None] * paired, axis=0)


def _fraction(values: np.ndarray) -> np.ndarray:
    squared = values ** 2
    return squared / (1.0 + squared)


def muskat_rhs_direct(f: GridFunction, quad: AlphaQuadrature) -> GridFunction:
    """(1/pi) pv int d_x Delta_alpha f / (1 + (Delta_alpha f)^2) d alpha."""
    integrand = slope_derivatives(f, quad) / (1.0 + slopes(f, quad) ** 2)
    return GridFunction.from_samples(f.grid, _pair_reduce(integrand, quad) / math.pi)


def quadrature_lambda(g: GridFunction, quad: AlphaQuadrature) -> GridFunction:
    """-(1/pi) pv int d_x Delta_alpha g d alpha, the quadrature realization of Lambda."""
    return GridFunction.from_samples(g.grid, -_pair_reduce(slope_derivatives(g, quad), quad) / math.pi)


def T_apply(f: GridFunction, g: GridFunction, quad: AlphaQuadrature) -> GridFunction:
    """T(f)g = -(1/pi) int (d_x Delta_alpha g) F_alpha(f) d alpha with F_alpha in [0, 1)."""
    if f.grid != g.grid:
        raise ValueError(f"grid mismatch: {f.grid} vs {g.grid}")
    integrand = slope_derivatives(g, quad) * _fraction(slopes(f, quad))
    return GridFunction.from_samples(f.grid, -_pair_reduce(integrand, quad) / math.pi)


def odd_even_parts(f: GridFunction, alpha: float) -> Tuple[GridFunction, GridFunction]:
    """
    O = (F_alpha - F_-alpha)/2 and E = (F_alpha + F_-alpha)/2.

    Raises:
        ValueError: if alpha is not positive
    """
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    rows = _fraction(_slopes_from_spectrum(f.grid, f.spectrum, np.array([alpha, -alpha])))
    odd = 0.5 * (rows[0] - rows[1])
    even = 0.5 * (rows[0] + rows[1])
    return GridFunction.from_samples(f.grid, odd), GridFunction.from_samples(f.grid, even)


def _odd_even_rows(f: GridFunction, quad: AlphaQuadrature) -> Tuple[np.ndarray, np.ndarray]:
    rows = _fraction(slopes(f, quad))
    pairs = quad.size
    return 0.5 * (rows[:pairs] - rows[pairs:]), 0.5 * (rows[:pairs] + rows[pairs:])


def transport_coeff_V(f: GridFunction, quad: AlphaQuadrature) -> GridFunction:
    """V = -(1/pi) int O(alpha, .)/alpha d alpha; O/alpha is even so the positive nodes are doubled."""
    odd, _ = _odd_even_rows(f, quad)
    values = -(2.0 / math.pi) * np.sum((quad.weights / quad.nodes)[:, None] * odd, axis=0)
    return GridFunction.from_samples(f.grid, values)


def fraction_coefficient(f: GridFunction) -> GridFunction:
    """f_x^2 / (1 + f_x^2) with the spectral derivative."""
    return GridFunction.from_samples(f.grid, _fraction(derivative(f).samples))


def remainder_R(f: GridFunction, g: GridFunction, quad: AlphaQuadrature) -> GridFunction:
    """
    R(f, g) from its own two integrals:
    -(1/pi) int (d_x Delta_alpha g)(E - f_x^2/(1+f_x^2)) + (1/pi) int (g_x(x - alpha)/alpha) O.
    """
    if f.grid != g.grid:
        raise ValueError(f"grid mismatch: {f.grid} vs {g.grid}")
    pairs = quad.size
    odd, even = _odd_even_rows(f, quad)
    # O is odd and E even in alpha
    odd_rows = np.concatenate([odd, -odd])
    even_rows = np.concatenate([even, even])
    coefficient = fraction_coefficient(f).samples

    first = slope_derivatives(g, quad) * (even_rows - coefficient[None, :])
    alphas = _signed_nodes(quad)
    second = shifted_derivatives(g, quad) / alphas[:, None] * odd_rows
    values = (-_pair_reduce(first, quad) + _pair_reduce(second, quad)) / math.pi
    logger.debug("remainder over %d node pairs", pairs)
    return GridFunction.from_samples(f.grid, values)


def hardy_chain(f: GridFunction, quad: AlphaQuadrature) -> Tuple[np.ndarray, np.ndarray]:
    """
    Both sides of int (Delta_alpha f - f_x)^2 d alpha/alpha^2 <= int (Delta_alpha f_x)^2 d alpha
    at every grid point, on the quadrature nodes.
    """
    f_x = derivative(f).samples
    alphas = _signed_nodes(quad)
    lhs_rows = (slopes(f, quad) - f_x[None, :]) ** 2 / alphas[:, None] ** 2
    rhs_rows = slope_derivatives(f, quad) ** 2
    return _pair_reduce(lhs_rows, quad), _pair_reduce(rhs_rows, quad)
