"""
Principal-value quadrature in the difference variable alpha.

Nodes come in pairs +alpha_i / -alpha_i sharing one weight; every alpha
integral in the package is evaluated as a sum over pairs with the two
members added first, which realizes the principal value.
"""
import math
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from ..spectral import Grid
from ..utils.quadrature import log_gauss_legendre

DEFAULT_NODES_PER_DECADE = 48


@dataclass(frozen=True, eq=False)
class AlphaQuadrature:
    """Positive nodes alpha_i (ascending) in [lower, upper] and weights w_i for d(alpha)."""
    nodes: np.ndarray
    weights: np.ndarray
    lower: float
    upper: float
    nodes_per_decade: int
    half_length: float

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.ndim != 1 or nodes.shape != weights.shape or nodes.size == 0:
            raise ValueError("nodes and weights must be nonempty 1-d arrays of equal length")
        if np.any(nodes <= 0) or np.any(np.diff(nodes) <= 0):
            raise ValueError("nodes must be strictly positive and increasing")
        if np.any(weights <= 0):
            raise ValueError("weights must be positive")
        if nodes[-1] > self.half_length * (1.0 + 1e-12):
            raise ValueError(f"alpha_max={nodes[-1]} exceeds the half length {self.half_length}")
        nodes.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    @property
    def alpha_min(self) -> float:
        return float(self.nodes[0])

    @property
    def alpha_max(self) -> float:
        return float(self.nodes[-1])

    @property
    def size(self) -> int:
        """Number of node pairs."""
        return int(self.nodes.size)

    def lambda_symbol(self, k: np.ndarray) -> np.ndarray:
        """(2/pi) |k| sum_i w_i sin(|k| alpha_i) / alpha_i, the symbol of the quadrature Lambda."""
        k = np.abs(np.asarray(k, dtype=float))
        kernel = np.sin(np.multiply.outer(k, self.nodes)) / self.nodes
        return (2.0 / math.pi) * k * (kernel @ self.weights)

    def refined(self, factor: int = 2) -> "AlphaQuadrature":
        """Same interval with factor times the node density."""
        return build_alpha_quadrature_range(self.lower, self.upper,
                                            self.nodes_per_decade * factor, self.half_length)

    def describe(self) -> Dict[str, Any]:
        return {
            "alpha_min": self.lower,
            "alpha_max": self.upper,
            "nodes_per_decade": self.nodes_per_decade,
            "pairs": self.size,
        }


def build_alpha_quadrature_range(lower: float, upper: float, nodes_per_decade: int,
                                 half_length: float) -> AlphaQuadrature:
    if upper > half_length * (1.0 + 1e-12):
        raise ValueError(f"alpha_max={upper} exceeds the half length {half_length}")
    log_nodes, log_weights = log_gauss_legendre(lower, upper, nodes_per_decade)
    return AlphaQuadrature(log_nodes, log_nodes * log_weights, float(lower), float(upper),
                           int(nodes_per_decade), float(half_length))


def build_alpha_quadrature(grid: Grid, nodes_per_decade: int = DEFAULT_NODES_PER_DECADE,
                           alpha_min: Optional[float] = None,
                           alpha_max: Optional[float] = None) -> AlphaQuadrature:
    """
    Quadrature on [alpha_min, alpha_max], defaults spacing/4 and L.

    Raises:
        ValueError: if the interval is empty or alpha_max exceeds L
    """
    lower = grid.spacing / 4.0 if alpha_min is None else float(alpha_min)
    upper = grid.half_length if alpha_max is None else float(alpha_max)
    return build_alpha_quadrature_range(lower, upper, nodes_per_decade, grid.half_length)
