"""
Axes of a parameter sweep.
"""
import itertools
from dataclasses import dataclass
from typing import Iterator, Tuple

from ..solver import RandomInit, SimConfig


@dataclass(frozen=True)
class SweepCell:
    index: int
    amplitude: float
    cutoff: float
    dt: float

    @property
    def label(self) -> str:
        return f"cell{self.index:03d}"


@dataclass(frozen=True)
class SweepSpec:
    """amplitude x cutoff x dt; cells are enumerated in that nesting order."""
    amplitudes: Tuple[float, ...]
    cutoffs: Tuple[float, ...]
    dts: Tuple[float, ...]

    def __post_init__(self):
        """Validate parameters after initialization."""
        for name in ("amplitudes", "cutoffs", "dts"):
            values = tuple(getattr(self, name))
            if not values:
                raise ValueError(f"{name} must not be empty")
            object.__setattr__(self, name, values)
        if any(a < 0 for a in self.amplitudes):
            raise ValueError("amplitudes must be nonnegative")
        if any(not n > 0 for n in self.cutoffs):
            raise ValueError("cutoffs must be positive")
        if any(not dt > 0 for dt in self.dts):
            raise ValueError("dts must be positive")

    def cells(self) -> Iterator[SweepCell]:
        product = itertools.product(self.amplitudes, self.cutoffs, self.dts)
        for index, (amplitude, cutoff, dt) in enumerate(product):
            yield SweepCell(index, amplitude, cutoff, dt)

    def __len__(self) -> int:
        return len(self.amplitudes) * len(self.cutoffs) * len(self.dts)

    def cell_config(self, base: SimConfig, cell: SweepCell) -> SimConfig:
        """
        base with the cell's cutoff and dt; the amplitude scales the base
        initial modes, or a seeded random field when base has no initial data.
        """
        changes = {"cutoff": cell.cutoff, "dt": cell.dt}
        if base.init_modes:
            scale = max(abs(m.amplitude) for m in base.init_modes)
            changes["init_modes"] = tuple(
                type(m)(m.k, m.amplitude * cell.amplitude / scale if scale else cell.amplitude, m.phase)
                for m in base.init_modes)
        elif base.init_random is not None:
            random = base.init_random
            changes["init_random"] = RandomInit(cell.amplitude, random.decay, random.max_mode)
        else:
            changes["init_random"] = RandomInit(amplitude=cell.amplitude)
        return base.with_changes(**changes)
