"""
Real periodic fields with a lazily synchronized Fourier spectrum.
"""
from typing import Iterable, Optional, Tuple, Union

import numpy as np
import scipy.fft

from .grid import Grid

Number = Union[int, float]


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


class GridFunction:
    """
    Immutable real field on a periodic grid.

    Either representation may be supplied at construction; the other one is
    computed on first access. The spectrum uses the raw rfft layout (N/2+1
    bins, no normalization), so ``samples == irfft(spectrum, N)``.
    """

    __slots__ = ("grid", "_samples", "_spectrum")

    def __init__(self, grid: Grid, samples: Optional[np.ndarray] = None,
                 spectrum: Optional[np.ndarray] = None):
        if samples is None and spectrum is None:
            raise ValueError("either samples or spectrum must be provided")
        self.grid = grid
        self._samples = None
        self._spectrum = None

        if samples is not None:
            values = np.array(samples, dtype=float)
            if values.shape != (grid.size,):
                raise ValueError(f"samples must have shape ({grid.size},), got {values.shape}")
            self._samples = _frozen(values)
        if spectrum is not None:
            coefficients = np.array(spectrum, dtype=complex)
            if coefficients.shape != (grid.size // 2 + 1,):
                raise ValueError(f"spectrum must have shape ({grid.size // 2 + 1},), got {coefficients.shape}")
            # mean and Nyquist bins of a real field are real
            coefficients[0] = coefficients[0].real
            coefficients[-1] = coefficients[-1].real
            self._spectrum = _frozen(coefficients)

    @classmethod
    def from_samples(cls, grid: Grid, samples: np.ndarray) -> "GridFunction":
        return cls(grid, samples=samples)

    @classmethod
    def from_spectrum(cls, grid: Grid, spectrum: np.ndarray) -> "GridFunction":
        return cls(grid, spectrum=spectrum)

    @classmethod
    def zeros(cls, grid: Grid) -> "GridFunction":
        return cls(grid, samples=np.zeros(grid.size))

    @classmethod
    def constant(cls, grid: Grid, value: float) -> "GridFunction":
        return cls(grid, samples=np.full(grid.size, float(value)))

    @classmethod
    def from_function(cls, grid: Grid, func) -> "GridFunction":
        """Sample a vectorized callable x -> f(x) on the grid points."""
        return cls(grid, samples=func(grid.points))

    @classmethod
    def from_modes(cls, grid: Grid, modes: Iterable[Tuple[Number, Number, Number]]) -> "GridFunction":
        """
        Superpose cosine modes.

        Args:
            grid: target grid
            modes: (wavenumber, amplitude, phase) triples, each giving amplitude*cos(k*x + phase)

        Raises:
            ValueError: if a wavenumber is not resolved by the grid
        """
        x = grid.points
        samples = np.zeros(grid.size)
        for k, amplitude, phase in modes:
            grid.mode_index(k)
            samples = samples + float(amplitude) * np.cos(float(k) * x + float(phase))
        return cls(grid, samples=samples)

    @classmethod
    def random_band_limited(cls, grid: Grid, rng: np.random.Generator, max_mode: int,
                            decay: float = 3.0, amplitude: float = 1.0) -> "GridFunction":
        """
        Random field with independent modes 1..max_mode.

        Mode j gets gaussian cosine and sine coefficients scaled by |k_j|^(-decay).
        """
        if max_mode < 1 or max_mode >= grid.size // 2:
            raise ValueError(f"max_mode must lie in [1, {grid.size // 2 - 1}], got {max_mode}")
        spectrum = np.zeros(grid.size // 2 + 1, dtype=complex)
        j = np.arange(1, max_mode + 1)
        k = j * grid.fundamental
        scale = amplitude * k ** (-float(decay))
        a = rng.standard_normal(max_mode)
        b = rng.standard_normal(max_mode)
        # a*cos(kx) + b*sin(kx) relative to the first grid point, in raw rfft units
        spectrum[1:max_mode + 1] = 0.5 * grid.size * scale * (a - 1j * b)
        return cls(grid, spectrum=spectrum)

    @property
    def samples(self) -> np.ndarray:
        if self._samples is None:
            values = scipy.fft.irfft(self._spectrum, n=self.grid.size)
            self._samples = _frozen(np.asarray(values, dtype=float))
        return self._samples

    @property
    def spectrum(self) -> np.ndarray:
        if self._spectrum is None:
            coefficients = scipy.fft.rfft(self._samples)
            coefficients[0] = coefficients[0].real
            coefficients[-1] = coefficients[-1].real
            self._spectrum = _frozen(np.asarray(coefficients, dtype=complex))
        return self._spectrum

    def l2_norm(self) -> float:
        """Sample-side L2 norm on the torus."""
        return float(np.sqrt(self.grid.spacing * np.sum(self.samples ** 2)))

    def spectral_l2_norm(self) -> float:
        """Spectrum-side L2 norm; agrees with l2_norm by Parseval."""
        power = self.grid.mode_multiplicity * np.abs(self.spectrum) ** 2
        return float(np.sqrt(self.grid.parseval_factor * np.sum(power)))

    def mean(self) -> float:
        return float(self.spectrum[0].real / self.grid.size)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.samples)))

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.samples)))

    def reflected(self) -> "GridFunction":
        """x -> f(-x) on the grid (the point -L maps to itself)."""
        values = self.samples
        return GridFunction(self.grid, samples=np.roll(values[::-1], 1))

    def _check_grid(self, other: "GridFunction") -> None:
        if other.grid != self.grid:
            raise ValueError(f"grid mismatch: {self.grid} vs {other.grid}")

    def __add__(self, other):
        if isinstance(other, GridFunction):
            self._check_grid(other)
            return GridFunction(self.grid, samples=self.samples + other.samples)
        return GridFunction(self.grid, samples=self.samples + float(other))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GridFunction):
            self._check_grid(other)
            return GridFunction(self.grid, samples=self.samples - other.samples)
        return GridFunction(self.grid, samples=self.samples - float(other))

    def __neg__(self):
        if self._spectrum is not None and self._samples is None:
            return GridFunction(self.grid, spectrum=-self._spectrum)
        return GridFunction(self.grid, samples=-self.samples)

    def __mul__(self, other):
        if isinstance(other, GridFunction):
            self._check_grid(other)
            return GridFunction(self.grid, samples=self.samples * other.samples)
        scale = float(other)
        if self._spectrum is not None and self._samples is None:
            return GridFunction(self.grid, spectrum=scale * self._spectrum)
        return GridFunction(self.grid, samples=scale * self.samples)

    __rmul__ = __mul__

    def __truediv__(self, other: Number):
        return self * (1.0 / float(other))

    def __repr__(self) -> str:
        return f"GridFunction({self.grid}, l2={self.l2_norm():.6g})"
