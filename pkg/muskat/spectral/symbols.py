"""
Fourier multiplier symbols.

Symbols are evaluated on nonnegative wavenumbers only (the rfft half);
real-preserving symbols satisfy m(-xi) = conj(m(xi)). Homogeneous symbols
vanish at xi = 0.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np


class Parity(Enum):
    EVEN_REAL = "even-real"
    ODD_IMAGINARY = "odd-imaginary"
    GENERAL = "general"


@dataclass(frozen=True)
class SymbolFn:
    """A Fourier multiplier xi -> m(xi) with its parity tag."""
    evaluator: Callable[[np.ndarray], np.ndarray]
    parity: Parity
    name: str

    def __call__(self, xi: np.ndarray) -> np.ndarray:
        xi = np.asarray(xi, dtype=float)
        return np.broadcast_to(np.asarray(self.evaluator(xi), dtype=complex), xi.shape)

    def __str__(self) -> str:
        return self.name


def _homogeneous_power(xi: np.ndarray, s: float) -> np.ndarray:
    magnitude = np.abs(xi)
    out = np.zeros_like(magnitude)
    positive = magnitude > 0
    out[positive] = magnitude[positive] ** s
    return out


def lambda_symbol() -> SymbolFn:
    return SymbolFn(lambda xi: np.abs(xi), Parity.EVEN_REAL, "|xi|")


def hilbert_symbol() -> SymbolFn:
    return SymbolFn(lambda xi: -1j * np.sign(xi), Parity.ODD_IMAGINARY, "-i sign(xi)")


def derivative_symbol() -> SymbolFn:
    return SymbolFn(lambda xi: 1j * xi, Parity.ODD_IMAGINARY, "i xi")


def power_symbol(s: float) -> SymbolFn:
    """|xi|^s with the mean mode annihilated."""
    return SymbolFn(lambda xi: _homogeneous_power(xi, s), Parity.EVEN_REAL, f"|xi|^{s:g}")


def weighted_symbol(s: float, phi: Callable[[np.ndarray], np.ndarray], phi_power: int = 1) -> SymbolFn:
    """
    |xi|^s * phi(|xi|)^phi_power, the symbol of the weighted operator <D>^{s, phi}.

    Args:
        s: order
        phi: vectorized weight evaluated on |xi|
        phi_power: exponent applied to phi (2 gives <D>^{s, phi^2})
    """
    def evaluate(xi: np.ndarray) -> np.ndarray:
        magnitude = np.abs(xi)
        return _homogeneous_power(magnitude, s) * np.asarray(phi(magnitude), dtype=float) ** phi_power

    label = "phi" if phi_power == 1 else f"phi^{phi_power}"
    return SymbolFn(evaluate, Parity.EVEN_REAL, f"|xi|^{s:g} {label}(|xi|)")
