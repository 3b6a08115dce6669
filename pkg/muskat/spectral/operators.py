"""
Spectral operators on grid functions: multipliers, Hilbert transform,
frequency truncation, shifts, finite differences and slopes.
"""
import logging

import numpy as np

from ..errors import NumericDomainError
from .grid_function import GridFunction
from .symbols import Parity, SymbolFn, derivative_symbol, hilbert_symbol, lambda_symbol

logger = logging.getLogger(__name__)

# relative slack when comparing wavenumbers against a cutoff
_CUTOFF_TOL = 1e-12


def apply_multiplier(f: GridFunction, m: SymbolFn) -> GridFunction:
    """
    Multiply the spectrum of f by m evaluated on the grid wavenumbers.

    Raises:
        NumericDomainError: if m is not finite on the grid
    """
    values = np.array(m(f.grid.half_wavenumbers), dtype=complex)
    if not np.all(np.isfinite(values)):
        raise NumericDomainError(f"symbol {m} is not finite on the wavenumbers of {f.grid}")
    if m.parity is Parity.ODD_IMAGINARY:
        # the Nyquist bin has no odd real counterpart
        values[-1] = 0.0
    return GridFunction.from_spectrum(f.grid, f.spectrum * values)


def hilbert_transform(f: GridFunction) -> GridFunction:
    return apply_multiplier(f, hilbert_symbol())


def derivative(f: GridFunction) -> GridFunction:
    return apply_multiplier(f, derivative_symbol())


def lambda_operator(f: GridFunction) -> GridFunction:
    return apply_multiplier(f, lambda_symbol())


def cutoff_mask(f: GridFunction, n: float) -> np.ndarray:
    if not n >= 0:
        raise ValueError(f"cutoff must be nonnegative, got {n}")
    return f.grid.half_wavenumbers <= n * (1.0 + _CUTOFF_TOL)


def project_Jn(f: GridFunction, n: float) -> GridFunction:
    """Sharp Fourier cutoff: keep |xi| <= n, drop the rest."""
    mask = cutoff_mask(f, n)
    return GridFunction.from_spectrum(f.grid, np.where(mask, f.spectrum, 0.0))


def shift(f: GridFunction, h: float) -> GridFunction:
    """x -> f(x - h), exact for band-limited fields."""
    factor = np.exp(-1j * h * f.grid.half_wavenumbers)
    return GridFunction.from_spectrum(f.grid, f.spectrum * factor)


def finite_difference(f: GridFunction, h: float, m: int = 1) -> GridFunction:
    """
    m-th order backward difference delta_h^m f, with delta_h f(x) = f(x) - f(x - h).

    Computed with the spectral factor (1 - exp(-i h xi))^m.
    """
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise ValueError(f"difference order must be a positive integer, got {m}")
    factor = (1.0 - np.exp(-1j * h * f.grid.half_wavenumbers)) ** int(m)
    return GridFunction.from_spectrum(f.grid, f.spectrum * factor)


def symmetric_second_difference(f: GridFunction, h: float) -> GridFunction:
    """2 f(x) - f(x + h) - f(x - h), spectral factor 2 - 2 cos(h xi)."""
    factor = 2.0 - 2.0 * np.cos(h * f.grid.half_wavenumbers)
    return GridFunction.from_spectrum(f.grid, f.spectrum * factor)


def slope(f: GridFunction, alpha: float) -> GridFunction:
    """
    Divided difference (f(x) - f(x - alpha)) / alpha.

    Raises:
        ValueError: if alpha is zero (use the derivative explicitly)
    """
    if alpha == 0:
        raise ValueError("alpha must be nonzero; the alpha -> 0 limit is the derivative")
    return finite_difference(f, alpha, 1) / alpha


def truncate_two_thirds(f: GridFunction) -> GridFunction:
    """Zero every mode with |j| > N/3."""
    j = np.arange(f.grid.size // 2 + 1)
    return GridFunction.from_spectrum(f.grid, np.where(3 * j <= f.grid.size, f.spectrum, 0.0))


def dealiased_product(u: GridFunction, v: GridFunction) -> GridFunction:
    """Pointwise product under the 2/3 rule: factors and result truncated to |j| <= N/3."""
    product = truncate_two_thirds(u) * truncate_two_thirds(v)
    return truncate_two_thirds(product)


def inner_product(u: GridFunction, v: GridFunction) -> float:
    """Torus inner product: spacing * sum(u * v)."""
    if u.grid != v.grid:
        raise ValueError(f"grid mismatch: {u.grid} vs {v.grid}")
    return float(u.grid.spacing * np.dot(u.samples, v.samples))
