"""
Spectral-route norms: Sobolev, fractional logarithmic, and phi-weighted.

All norms are Parseval-consistent: the homogeneous order-0 norm equals the
L2 norm of the mean-zero part.
"""
from typing import Callable

import numpy as np

from ..spectral import GridFunction, apply_multiplier, weighted_symbol


def weighted_spectral_sum(f: GridFunction, weight: Callable[[np.ndarray], np.ndarray],
                          include_mean: bool = True) -> float:
    """sqrt of the Parseval sum of weight(|xi|) * |f_hat|^2."""
    grid = f.grid
    k = grid.half_wavenumbers
    w = np.asarray(weight(k), dtype=float)
    power = grid.mode_multiplicity * np.abs(f.spectrum) ** 2 * w
    if not include_mean:
        power = power[1:]
    return float(np.sqrt(grid.parseval_factor * np.sum(power)))


def sobolev_weight(k: np.ndarray, sigma: float, homogeneous: bool = True) -> np.ndarray:
    k = np.abs(np.asarray(k, dtype=float))
    if homogeneous:
        out = np.zeros_like(k)
        positive = k > 0
        out[positive] = k[positive] ** (2.0 * sigma)
        return out
    return (1.0 + k ** 2) ** sigma


def log_sobolev_weight(k: np.ndarray, s: float, a: float) -> np.ndarray:
    k = np.abs(np.asarray(k, dtype=float))
    return (1.0 + k ** 2) ** s * np.log(4.0 + k) ** (2.0 * a)


def sobolev_norm(f: GridFunction, sigma: float, homogeneous: bool = True) -> float:
    """
    ||f||_{H^sigma} (inhomogeneous weight (1 + |xi|^2)^sigma) or the
    homogeneous seminorm with weight |xi|^(2 sigma) and the mean excluded.
    """
    return weighted_spectral_sum(f, lambda k: sobolev_weight(k, sigma, homogeneous),
                                 include_mean=not homogeneous)


def log_sobolev_norm(f: GridFunction, s: float, a: float) -> float:
    """Norm with weight (1 + |xi|^2)^s log(4 + |xi|)^(2a)."""
    if s < 0 or a < 0:
        raise ValueError(f"s and a must be nonnegative, got s={s}, a={a}")
    return weighted_spectral_sum(f, lambda k: log_sobolev_weight(k, s, a))


def log_weighted_seminorm(f: GridFunction, s: float, a: float) -> float:
    """Homogeneous seminorm || |xi|^s log(4 + |xi|)^a f_hat ||."""
    return weighted_spectral_sum(
        f, lambda k: sobolev_weight(k, s) * np.log(4.0 + k) ** (2.0 * a), include_mean=False)


def weighted_norm(f: GridFunction, s: float, phi, phi_power: int = 1) -> float:
    """
    ||<D>^{s, phi} f||_{L2}, the L2 norm of the multiplier |xi|^s phi(|xi|)^phi_power.

    Raises:
        OutOfRangeError: if the grid wavenumbers leave the phi table
    """
    return apply_multiplier(f, weighted_symbol(s, phi, phi_power)).spectral_l2_norm()
