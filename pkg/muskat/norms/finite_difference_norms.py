"""
Finite-difference norms: the weighted Gagliardo semi-norm, Triebel-Lizorkin
and Besov.

The h-integrals run over a symmetric log-spaced mesh on [h_min, h_max]; the
part |h| > h_max is not computed but bounded with |delta_h^m f| <= 2^m ||f||_inf,
and the bound is returned with every detailed evaluation.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import scipy.fft

from ..spectral import Grid, GridFunction
from ..utils.quadrature import log_gauss_legendre
from ..weights import Kappa, KappaFamily

logger = logging.getLogger(__name__)

# the s = 0 form only integrates over |h| < 1/2
ZERO_ORDER_CUTOFF = 0.5


@dataclass(frozen=True)
class HMeshSpec:
    """Log-spaced mesh for the h-integrals; bounds default to spacing/4 and 4L."""
    nodes_per_decade: int = 32
    h_min: Optional[float] = None
    h_max: Optional[float] = None

    def __post_init__(self):
        if self.nodes_per_decade < 1:
            raise ValueError(f"nodes_per_decade must be positive, got {self.nodes_per_decade}")
        if self.h_min is not None and self.h_min <= 0:
            raise ValueError(f"h_min must be positive, got {self.h_min}")
        if self.h_min is not None and self.h_max is not None and self.h_max <= self.h_min:
            raise ValueError(f"h_max must exceed h_min, got [{self.h_min}, {self.h_max}]")

    def bounds(self, grid: Grid) -> Tuple[float, float]:
        lower = self.h_min if self.h_min is not None else grid.spacing / 4.0
        upper = self.h_max if self.h_max is not None else 4.0 * grid.half_length
        return float(lower), float(upper)

    def nodes(self, grid: Grid, upper: Optional[float] = None) -> Tuple[np.ndarray, np.ndarray]:
        """Positive nodes and their weights for the measure dh/h."""
        lower, default_upper = self.bounds(grid)
        return log_gauss_legendre(lower, default_upper if upper is None else upper, self.nodes_per_decade)


@dataclass(frozen=True)
class FiniteDifferenceNorm:
    value: float
    tail_bound: float
    h_min: float
    h_max: float
    node_count: int

    def __float__(self) -> float:
        return self.value


def _check_exponents(s: float, p: float, q: float, m: int) -> None:
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise ValueError(f"difference order m must be a positive integer, got {m}")
    for name, value in (("p", p), ("q", q)):
        if not (math.isfinite(value) and value >= 1.0):
            raise ValueError(f"{name} must lie in [1, inf), got {value}")
    if not m - 1 <= s < m:
        raise ValueError(f"s must lie in [m-1, m) = [{m - 1}, {m}), got {s}")


def _difference_samples(f: GridFunction, h: np.ndarray, m: int) -> np.ndarray:
    """delta_{+h}^m f and delta_{-h}^m f for every node, shape (2 * len(h), N)."""
    k = f.grid.half_wavenumbers
    signed = np.concatenate([h, -h])
    factors = (1.0 - np.exp(-1j * signed[:, None] * k[None, :])) ** m
    return scipy.fft.irfft(f.spectrum[None, :] * factors, n=f.grid.size, axis=1)


def _second_difference_power(f: GridFunction, h: np.ndarray) -> np.ndarray:
    """int |2f(x) - f(x+h) - f(x-h)|^2 dx for every node, by Parseval."""
    grid = f.grid
    k = grid.half_wavenumbers
    factor = (2.0 - 2.0 * np.cos(h[:, None] * k[None, :])) ** 2
    power = grid.mode_multiplicity * np.abs(f.spectrum) ** 2
    return grid.parseval_factor * (factor @ power)


def gagliardo_seminorm_detailed(f: GridFunction, s: float, kappa: Kappa,
                                mesh: Optional[HMeshSpec] = None) -> FiniteDifferenceNorm:
    """
    Weighted second-difference semi-norm.

    For 0 < s < 2 the weight is (|h|^-s kappa(1/|h|))^2 dx dh/|h|. For s = 0
    the power-log form log(4 + 1/h^2)^(-1+2a) restricted to |h| < 1/2 is used.

    Raises:
        ValueError: for s outside {0} and (0, 2), or s = 0 with a non power-log kappa
    """
    mesh = mesh or HMeshSpec()
    lower, upper = mesh.bounds(f.grid)
    sup = f.max_abs()

    if s == 0:
        if kappa.family is not KappaFamily.POWER_LOG:
            raise ValueError(f"the s=0 form needs a power-log kappa, got {kappa}")
        if lower >= ZERO_ORDER_CUTOFF:
            raise ValueError(f"h_min must lie below {ZERO_ORDER_CUTOFF} for s=0, got {lower}")
        a = float(kappa.param("a"))
        upper = min(upper, ZERO_ORDER_CUTOFF)

        def weight(h):
            return np.log(4.0 + 1.0 / h ** 2) ** (-1.0 + 2.0 * a)

        h, w = mesh.nodes(f.grid, upper)
        if upper < ZERO_ORDER_CUTOFF:
            worst = max(float(weight(np.float64(upper))), float(weight(np.float64(ZERO_ORDER_CUTOFF))))
            tail_integral = worst * math.log(ZERO_ORDER_CUTOFF / upper)
        else:
            tail_integral = 0.0
    elif 0.0 < s < 2.0:
        def weight(h):
            return h ** (-2.0 * s) * kappa(1.0 / h) ** 2

        h, w = mesh.nodes(f.grid, upper)
        # kappa(1/h) is nonincreasing in h
        tail_integral = float(kappa(1.0 / upper)) ** 2 * upper ** (-2.0 * s) / (2.0 * s)
    else:
        raise ValueError(f"Gagliardo semi-norm needs s = 0 or 0 < s < 2, got {s}")

    # both signs of h contribute equally
    squared = 2.0 * float(np.sum(w * weight(h) * _second_difference_power(f, h)))
    tail = 2.0 * 16.0 * sup ** 2 * 2.0 * f.grid.half_length * tail_integral
    value = math.sqrt(squared)
    return FiniteDifferenceNorm(value, math.sqrt(squared + tail) - value, lower, upper, 2 * h.size)


def gagliardo_seminorm(f: GridFunction, s: float, kappa: Kappa, mesh: Optional[HMeshSpec] = None) -> float:
    return gagliardo_seminorm_detailed(f, s, kappa, mesh).value


def _power_tail(s: float, q: float, h_max: float) -> float:
    """int_{|h| > h_max} |h|^(-1-qs) dh, infinite for s = 0."""
    if s <= 0:
        return math.inf
    return 2.0 * h_max ** (-q * s) / (q * s)


def triebel_lizorkin_norm_detailed(f: GridFunction, s: float, p: float, q: float, m: int,
                                   mesh: Optional[HMeshSpec] = None) -> FiniteDifferenceNorm:
    """
    (int (int |delta_h^m f(x)|^q dh/|h|^(1+qs))^(p/q) dx)^(1/p).

    Raises:
        ValueError: for an invalid (s, p, q, m) combination
    """
    _check_exponents(s, p, q, m)
    mesh = mesh or HMeshSpec()
    lower, upper = mesh.bounds(f.grid)
    h, w = mesh.nodes(f.grid)
    differences = np.abs(_difference_samples(f, h, int(m))) ** q
    node_weights = np.tile(w * h ** (-q * s), 2)
    inner = node_weights @ differences
    spacing = f.grid.spacing
    value = float(spacing * np.sum(inner ** (p / q))) ** (1.0 / p)

    sup = f.max_abs()
    tau = 0.0 if sup == 0 else (2.0 ** m * sup) ** q * _power_tail(s, q, upper)
    if math.isinf(tau):
        tail = math.inf
    else:
        tail = float(spacing * np.sum((inner + tau) ** (p / q))) ** (1.0 / p) - value
    return FiniteDifferenceNorm(value, tail, lower, upper, 2 * h.size)


def triebel_lizorkin_norm(f: GridFunction, s: float, p: float, q: float, m: int,
                          mesh: Optional[HMeshSpec] = None) -> float:
    return triebel_lizorkin_norm_detailed(f, s, p, q, m, mesh).value


def besov_norm_detailed(f: GridFunction, s: float, p: float, q: float, m: int,
                        mesh: Optional[HMeshSpec] = None) -> FiniteDifferenceNorm:
    """
    (int (int |delta_h^m f(x)|^p dx)^(q/p) dh/|h|^(1+qs))^(1/q).

    Raises:
        ValueError: for an invalid (s, p, q, m) combination
    """
    _check_exponents(s, p, q, m)
    mesh = mesh or HMeshSpec()
    lower, upper = mesh.bounds(f.grid)
    h, w = mesh.nodes(f.grid)
    differences = np.abs(_difference_samples(f, h, int(m))) ** p
    x_norms = (f.grid.spacing * np.sum(differences, axis=1)) ** (1.0 / p)
    node_weights = np.tile(w * h ** (-q * s), 2)
    total = float(np.sum(node_weights * x_norms ** q))
    value = total ** (1.0 / q)

    bound = 2.0 ** m * f.max_abs() * (2.0 * f.grid.half_length) ** (1.0 / p)
    tau = 0.0 if bound == 0 else bound ** q * _power_tail(s, q, upper)
    tail = math.inf if math.isinf(tau) else (total + tau) ** (1.0 / q) - value
    return FiniteDifferenceNorm(value, tail, lower, upper, 2 * h.size)


def besov_norm(f: GridFunction, s: float, p: float, q: float, m: int,
               mesh: Optional[HMeshSpec] = None) -> float:
    return besov_norm_detailed(f, s, p, q, m, mesh).value
