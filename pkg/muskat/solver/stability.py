"""
Two-solution stability: the H^{1/2} gap between two runs against the
exponential budget built from their ||.||_{2,1/3} norms.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np
from scipy import integrate

from ..norms import log_weighted_seminorm, sobolev_norm
from ..spectral import GridFunction, project_Jn
from .energy import build_context
from .integrator import step
from .sim_config import SimConfig

logger = logging.getLogger(__name__)


@dataclass
class GapTrace:
    times: List[float] = field(default_factory=list)
    gaps: List[float] = field(default_factory=list)
    budgets: List[float] = field(default_factory=list)
    premise: List[float] = field(default_factory=list)

    @property
    def initial_gap(self) -> float:
        return self.gaps[0] if self.gaps else 0.0

    def relative_gaps(self) -> np.ndarray:
        gaps = np.asarray(self.gaps)
        if self.initial_gap == 0:
            return np.zeros_like(gaps)
        return gaps / self.initial_gap

    def within_budget(self, tolerance: float = 1e-12) -> bool:
        return bool(np.all(self.relative_gaps() <= np.asarray(self.budgets) * (1.0 + tolerance)))

    def to_dict(self) -> Dict[str, List[float]]:
        return {"t": list(self.times), "gap": list(self.gaps), "budget": list(self.budgets),
                "premise": list(self.premise)}


def budget_density(f: GridFunction) -> float:
    """log(4 + ||f||_{2,1/3})^(-1/3) ||f||_{2,1/3}^2."""
    norm = log_weighted_seminorm(f, 2.0, 1.0 / 3.0)
    return math.log(4.0 + norm) ** (-1.0 / 3.0) * norm ** 2


def two_solution_gap(f10: GridFunction, f20: GridFunction, cfg: SimConfig) -> GapTrace:
    """
    Advance both data with the same steps and record ||f1 - f2||_{H^{1/2}}
    and exp(C sum_k int budget_density(f_k) dt) with C = cfg.constants.gronwall_C.

    The premise sup ||f_k||_{3/2,1/3}^2 + int budget_density(f_k) dt is recorded,
    not enforced.

    Raises:
        StepFailure: propagated from either run
    """
    if f10.grid != f20.grid or f10.grid != cfg.grid:
        raise ValueError("both data must live on the configured grid")
    context = build_context(cfg, project_Jn(f10, cfg.n))
    f1, f2 = project_Jn(f10, cfg.n), project_Jn(f20, cfg.n)
    dt = cfg.time_step
    C = cfg.constants.gronwall_C

    result = GapTrace()
    times: List[float] = []
    densities: List[List[float]] = [[], []]
    sup_norms = [0.0, 0.0]

    def record(t: float) -> None:
        times.append(t)
        for index, state in enumerate((f1, f2)):
            densities[index].append(budget_density(state))
            sup_norms[index] = max(sup_norms[index], log_weighted_seminorm(state, 1.5, 1.0 / 3.0) ** 2)
        accumulated = [float(integrate.trapezoid(d, times)) if len(times) > 1 else 0.0 for d in densities]
        result.times.append(t)
        result.gaps.append(sobolev_norm(f1 - f2, 0.5))
        result.budgets.append(math.exp(C * sum(accumulated)))
        result.premise.append(max(s + a for s, a in zip(sup_norms, accumulated)))

    record(0.0)
    for index in range(cfg.step_count):
        t = index * dt
        f1 = step(f1, dt, cfg, context, t)
        f2 = step(f2, dt, cfg, context, t)
        record((index + 1) * dt)
    logger.info("two-solution gap: final %.4g (budget %.4g)", result.gaps[-1], result.budgets[-1])
    return result
