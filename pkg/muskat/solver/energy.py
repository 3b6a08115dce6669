"""
Energy monitors: the weighted norms A and B, the degeneracy and gain factors
delta and mu, and the Lyapunov functional.
"""
import logging
import math
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Dict, List, Optional

import numpy as np

from ..errors import NumericDomainError
from ..nonlinearity import AlphaQuadrature, slopes
from ..spectral import Grid, GridFunction, apply_multiplier, derivative, project_Jn, weighted_symbol
from ..weights import Kappa, Phi, data_adapted_kappa, kappa_power_log, tabulate_phi
from ..norms import weighted_norm
from .sim_config import SimConfig, WeightKind

logger = logging.getLogger(__name__)

TRACE_COLUMNS = ("t", "l2", "A", "B", "delta", "mu", "lyapunov")

# the delta exponent is 1 - 2a with a = 1/3 for data-adapted runs
DATA_ADAPTED_DELTA_A = 1.0 / 3.0


def phi_range_for(grid: Grid):
    """Table range covering every grid wavenumber."""
    upper = 10.0 ** math.ceil(math.log10(max(grid.max_wavenumber, 10.0)))
    return 1e-3, upper


@dataclass(frozen=True)
class SolverContext:
    """Everything the stepper and the monitors derive once from a SimConfig."""
    grid: Grid
    n: float
    quad: AlphaQuadrature
    kappa: Kappa
    phi: Phi
    a: float


def build_context(cfg: SimConfig, f0: Optional[GridFunction] = None) -> SolverContext:
    """
    Resolve the quadrature and the weight of cfg.

    Data-adapted weights are built from f0, the projected initial datum
    (computed from cfg when not given).
    """
    grid = cfg.grid
    if cfg.weight_kind is WeightKind.DATA_ADAPTED:
        if f0 is None:
            f0 = project_Jn(cfg.initial_data(), cfg.n)
        kappa = data_adapted_kappa(f0)
        a = DATA_ADAPTED_DELTA_A
    else:
        kappa = kappa_power_log(cfg.weight_a)
        a = cfg.weight_a
    phi = tabulate_phi(kappa, lambda_range=phi_range_for(grid), allow_degenerate=cfg.weight_a == 0.0)
    return SolverContext(grid=grid, n=cfg.n, quad=cfg.quadrature(), kappa=kappa, phi=phi, a=a)


@dataclass(frozen=True)
class EnergyRecord:
    t: float
    l2: float
    A: float
    B: float
    delta: float
    mu: float
    lyapunov: float

    def as_row(self) -> List[float]:
        return [getattr(self, name) for name in TRACE_COLUMNS]

    def is_finite(self) -> bool:
        return all(math.isfinite(v) for v in self.as_row())

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


class TerminationReason(Enum):
    REACHED_T = "reached-T"
    STEP_FAILURE = "step-failure"
    MONITOR_BLOWUP = "monitor-blow-up"


@dataclass
class EnergyTrace:
    """Records in strictly increasing time, optionally with the states they were taken from."""
    config_digest: str
    f0_l2: float = 0.0
    records: List[EnergyRecord] = field(default_factory=list)
    states: List[GridFunction] = field(default_factory=list)
    termination: TerminationReason = TerminationReason.REACHED_T
    failure: Optional[str] = None

    def append(self, record: EnergyRecord, state: Optional[GridFunction] = None) -> None:
        if self.records and not record.t > self.records[-1].t:
            raise ValueError(f"record time {record.t} does not follow {self.records[-1].t}")
        self.records.append(record)
        if state is not None:
            self.states.append(state)

    def column(self, name: str) -> np.ndarray:
        if name not in TRACE_COLUMNS:
            raise ValueError(f"unknown trace column {name!r}")
        return np.array([getattr(r, name) for r in self.records])

    @property
    def final(self) -> Optional[EnergyRecord]:
        return self.records[-1] if self.records else None

    def __len__(self) -> int:
        return len(self.records)


def frequency_ratio(A: float, B: float) -> float:
    """B/A with B/A := 0 when both vanish."""
    if A > 0:
        return B / A
    if B == 0:
        return 0.0
    raise NumericDomainError(f"A vanishes while B={B} does not")


def lyapunov(f: GridFunction, quad: AlphaQuadrature) -> float:
    """int int log sqrt(1 + (Delta_alpha f)^2) dx d alpha on the alpha quadrature."""
    rows = 0.5 * np.log1p(slopes(f, quad) ** 2)
    pairs = quad.size
    per_node = f.grid.spacing * np.sum(rows[:pairs] + rows[pairs:], axis=1)
    return float(np.sum(quad.weights * per_node))


def dissipation(f: GridFunction, phi: Phi) -> float:
    """int |<D>^{2,phi} f|^2 / (1 + f_x^2) dx."""
    weighted = apply_multiplier(f, weighted_symbol(2.0, phi)).samples
    f_x = derivative(f).samples
    return float(f.grid.spacing * np.sum(weighted ** 2 / (1.0 + f_x ** 2)))


def monitors(f: GridFunction, cfg: SimConfig, f0_l2: float, t: float = 0.0,
             context: Optional[SolverContext] = None) -> EnergyRecord:
    """All fields of the energy record for state f at time t."""
    context = context or build_context(cfg)
    A = weighted_norm(f, 1.5, context.phi) ** 2
    B = weighted_norm(f, 2.0, context.phi) ** 2
    ratio = frequency_ratio(A, B)
    mass = A + f0_l2 ** 2
    # mass = 0 forces A = B = 0
    log_term = math.log(4.0 + (B / mass if mass > 0 else 0.0))
    delta = 1.0 / (1.0 + log_term ** (1.0 - 2.0 * context.a) * mass)
    # the zero state has no frequency to weigh
    mu = 1.0 if A == 0 else 1.0 / float(context.kappa(ratio))
    return EnergyRecord(t=float(t), l2=f.l2_norm(), A=A, B=B, delta=delta, mu=mu,
                        lyapunov=lyapunov(f, context.quad))
