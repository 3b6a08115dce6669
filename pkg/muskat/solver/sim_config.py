"""
Simulation parameters.
"""
import hashlib
import json
import math
from dataclasses import asdict, dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..nonlinearity import AlphaQuadrature, build_alpha_quadrature
from ..spectral import Grid, GridFunction, make_grid


class WeightKind(Enum):
    POWER_LOG = "power-log"
    DATA_ADAPTED = "data-adapted"


@dataclass(frozen=True)
class InitialMode:
    """amplitude * cos(k x + phase)"""
    k: float
    amplitude: float
    phase: float = 0.0


@dataclass(frozen=True)
class RandomInit:
    amplitude: float = 0.01
    decay: float = 3.0
    max_mode: int = 8

    def __post_init__(self):
        if self.max_mode < 1:
            raise ValueError(f"max_mode must be positive, got {self.max_mode}")


@dataclass(frozen=True)
class Constants:
    """Proof constants without numeric values; defaults are calibration choices."""
    C1: float = 1.0
    C2: float = 1.0
    c0: float = 0.05
    gronwall_C: float = 1.0

    def __post_init__(self):
        for name in ("C1", "C2", "c0", "gronwall_C"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")


@dataclass(frozen=True)
class SimConfig:
    """
    Configuration for one simulation of the truncated Cauchy problem.

    cutoff defaults to half the largest resolved wavenumber and dt to
    0.5 * min(1/n, spacing). Initial data is the sum of the cosine modes, the
    file samples and the seeded random field, whichever are given.
    """
    half_length: float = 16.0 * math.pi
    size: int = 256
    cutoff: Optional[float] = None
    weight_kind: WeightKind = WeightKind.POWER_LOG
    weight_a: float = 1.0 / 3.0
    dt: Optional[float] = None
    final_time: float = 5.0
    alpha_nodes_per_decade: int = 48
    alpha_min: Optional[float] = None
    alpha_max: Optional[float] = None
    init_modes: Tuple[InitialMode, ...] = ()
    init_file: Optional[str] = None
    init_random: Optional[RandomInit] = None
    cadence: int = 1
    seed: int = 0
    constants: Constants = field(default_factory=Constants)
    nonlinear: bool = True
    keep_states: bool = False
    blowup_threshold: float = 1e12

    def __post_init__(self):
        """Validate parameters after initialization."""
        grid = self.grid
        if self.dt is not None and not self.dt > 0:
            raise ValueError("dt must be positive")
        if not (math.isfinite(self.final_time) and self.final_time > 0):
            raise ValueError("T must be positive")
        if self.cutoff is not None:
            if not self.cutoff > 0:
                raise ValueError("cutoff must be positive")
            if self.cutoff > grid.max_wavenumber * (1.0 + 1e-12):
                raise ValueError(f"cutoff {self.cutoff} exceeds the Nyquist wavenumber {grid.max_wavenumber}")
        if not 0.0 <= self.weight_a <= 1.0:
            raise ValueError(f"weight a must lie in [0, 1], got {self.weight_a}")
        if self.cadence < 1:
            raise ValueError("cadence must be a positive integer")
        if self.alpha_nodes_per_decade < 1:
            raise ValueError("alpha_nodes_per_decade must be positive")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        for mode in self.init_modes:
            grid.mode_index(mode.k)

    @property
    def grid(self) -> Grid:
        return make_grid(self.half_length, self.size)

    @property
    def n(self) -> float:
        """Galerkin cutoff."""
        if self.cutoff is not None:
            return float(self.cutoff)
        return 0.5 * self.grid.max_wavenumber

    @property
    def step_count(self) -> int:
        requested = self.dt if self.dt is not None else 0.5 * min(1.0 / self.n, self.grid.spacing)
        return max(1, int(math.ceil(self.final_time / requested * (1.0 - 1e-12))))

    @property
    def time_step(self) -> float:
        """Step actually taken: T divided into step_count equal steps."""
        return self.final_time / self.step_count

    def quadrature(self) -> AlphaQuadrature:
        return build_alpha_quadrature(self.grid, self.alpha_nodes_per_decade, self.alpha_min, self.alpha_max)

    def initial_data(self) -> GridFunction:
        """The datum before projection by J_n."""
        grid = self.grid
        samples = np.zeros(grid.size)
        if self.init_modes:
            modes = [(m.k, m.amplitude, m.phase) for m in self.init_modes]
            samples = samples + GridFunction.from_modes(grid, modes).samples
        if self.init_file is not None:
            values = np.loadtxt(Path(self.init_file), dtype=float).ravel()
            if values.shape != (grid.size,):
                raise ValueError(f"{self.init_file} holds {values.size} samples, expected {grid.size}")
            samples = samples + values
        if self.init_random is not None:
            rng = np.random.default_rng(self.seed)
            spec = self.init_random
            field_ = GridFunction.random_band_limited(grid, rng, spec.max_mode, spec.decay, spec.amplitude)
            samples = samples + field_.samples
        return GridFunction.from_samples(grid, samples)

    def with_changes(self, **changes) -> "SimConfig":
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        """Canonical, JSON-ready form with derived defaults resolved."""
        data = asdict(self)
        data["weight_kind"] = self.weight_kind.value
        data["init_modes"] = [asdict(m) for m in self.init_modes]
        data["cutoff"] = self.n
        data["dt"] = self.time_step
        quad = self.quadrature()
        data["alpha_min"] = quad.lower
        data["alpha_max"] = quad.upper
        return data

    def digest(self) -> str:
        """SHA-256 of the canonical JSON of to_dict()."""
        return config_digest(self.to_dict())


def config_digest(data: Dict[str, Any]) -> str:
    text = json.dumps(data, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
