"""
Seeded field ensembles for the ratio checks.
"""
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Protocol, Tuple

import numpy as np

from ..spectral import Grid, GridFunction


class Ensemble(Protocol):
    grid: Grid

    def fields(self) -> List[GridFunction]:
        ...

    def pairs(self) -> List[Tuple[GridFunction, GridFunction]]:
        ...

    def describe(self) -> Dict[str, Any]:
        ...


@dataclass(frozen=True)
class RandomEnsemble:
    """
    Independent modes 1..max_mode with gaussian coefficients scaled by
    amplitude * |k|^-decay. Fields use the seed, pairs use seed + 1.
    """
    grid: Grid
    size: int = 50
    decay: float = 3.0
    max_mode: Optional[int] = None
    seed: int = 0
    amplitude: float = 1.0

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"ensemble size must be positive, got {self.size}")

    @property
    def modes(self) -> int:
        return self.max_mode if self.max_mode is not None else self.grid.size // 8

    def _draw(self, rng: np.random.Generator) -> GridFunction:
        return GridFunction.random_band_limited(self.grid, rng, self.modes, self.decay, self.amplitude)

    def fields(self) -> List[GridFunction]:
        rng = np.random.default_rng(self.seed)
        return [self._draw(rng) for _ in range(self.size)]

    def pairs(self) -> List[Tuple[GridFunction, GridFunction]]:
        rng = np.random.default_rng(self.seed + 1)
        return [(self._draw(rng), self._draw(rng)) for _ in range(self.size)]

    def describe(self) -> Dict[str, Any]:
        return {
            "law": "gaussian modes, amplitude |k|^-decay",
            "grid": {"L": self.grid.half_length, "N": self.grid.size},
            "size": self.size,
            "decay": self.decay,
            "max_mode": self.modes,
            "seed": self.seed,
            "amplitude": self.amplitude,
        }


@dataclass(frozen=True)
class FixedEnsemble:
    """An explicit list of fields; pairs are consecutive (f, g) couples of the list."""
    grid: Grid
    members: Tuple[GridFunction, ...]
    label: str = "fixed"

    def fields(self) -> List[GridFunction]:
        return list(self.members)

    def pairs(self) -> List[Tuple[GridFunction, GridFunction]]:
        members = list(self.members)
        return list(zip(members[0::2], members[1::2]))

    def describe(self) -> Dict[str, Any]:
        return {"law": self.label, "grid": {"L": self.grid.half_length, "N": self.grid.size},
                "size": len(self.members)}
