"""
Periodic grid on the torus [-L, L).
"""
import math
from dataclasses import dataclass

import numpy as np


def _is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class Grid:
    """Uniform grid of N points on [-L, L) with wavenumbers k_j = pi*j/L."""
    half_length: float
    size: int

    def __post_init__(self):
        """Validate grid parameters after initialization."""
        if isinstance(self.size, bool) or not isinstance(self.size, (int, np.integer)):
            raise ValueError("size must be an integer")
        if not _is_power_of_two(int(self.size)) or self.size < 8:
            raise ValueError(f"size must be a power of two and at least 8, got {self.size}")
        if not math.isfinite(self.half_length) or self.half_length <= 0:
            raise ValueError(f"half_length must be positive, got {self.half_length}")

    @property
    def spacing(self) -> float:
        # N is a power of two, so 2L/N and its product with N are exact
        return 2.0 * self.half_length / self.size

    @property
    def fundamental(self) -> float:
        """Smallest nonzero wavenumber pi/L."""
        return math.pi / self.half_length

    @property
    def points(self) -> np.ndarray:
        return -self.half_length + self.spacing * np.arange(self.size)

    @property
    def wavenumbers(self) -> np.ndarray:
        """All wavenumbers pi*j/L for j in [-N/2, N/2), in ascending order."""
        j = np.arange(-self.size // 2, self.size // 2)
        return j * self.fundamental

    @property
    def half_wavenumbers(self) -> np.ndarray:
        """Nonnegative wavenumbers matching the rfft layout (j = 0..N/2)."""
        return np.arange(self.size // 2 + 1) * self.fundamental

    @property
    def max_wavenumber(self) -> float:
        """Largest resolved wavenumber magnitude (the Nyquist mode)."""
        return (self.size // 2) * self.fundamental

    @property
    def mode_multiplicity(self) -> np.ndarray:
        """How many full-spectrum modes each rfft bin stands for (1 at 0 and Nyquist, else 2)."""
        weights = np.full(self.size // 2 + 1, 2.0)
        weights[0] = 1.0
        weights[-1] = 1.0
        return weights

    @property
    def parseval_factor(self) -> float:
        """Factor turning sum(multiplicity*|F|^2) of raw rfft bins into the torus L2 norm squared."""
        return 2.0 * self.half_length / float(self.size) ** 2

    def mode_index(self, k: float, tol: float = 1e-9) -> int:
        """Return j with pi*j/L == |k|, or raise ValueError if k is not a grid wavenumber."""
        j_float = abs(k) / self.fundamental
        j = int(round(j_float))
        if abs(j_float - j) > tol * max(1.0, j_float):
            raise ValueError(f"wavenumber {k} is not a multiple of pi/L = {self.fundamental}")
        if j > self.size // 2:
            raise ValueError(f"wavenumber {k} exceeds the largest resolved wavenumber {self.max_wavenumber}")
        return j

    def __str__(self) -> str:
        return f"Grid(L={self.half_length}, N={self.size})"


def make_grid(half_length: float, size: int) -> Grid:
    """
    Build a periodic grid.

    Args:
        half_length: L > 0, the domain is [-L, L)
        size: number of points, a power of two not smaller than 8

    Returns:
        Grid instance

    Raises:
        ValueError: if the size or half_length is invalid
    """
    return Grid(half_length=float(half_length), size=size)
