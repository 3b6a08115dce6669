"""
Time integration of the truncated Muskat problem and its energy bookkeeping.

This package contains:
- SimConfig: simulation parameters with validation
- step/simulate: integrating-factor midpoint stepping with energy traces
- monitors: A, B, delta, mu and the Lyapunov functional
- smallness_check and the absorption margin of the small-data regime
- predicted_T0: the local existence time for data-adapted weights
- two_solution_gap and self_convergence_order
"""

from .sim_config import Constants, InitialMode, RandomInit, SimConfig, WeightKind, config_digest
from .energy import (
    TRACE_COLUMNS,
    EnergyRecord,
    EnergyTrace,
    SolverContext,
    TerminationReason,
    build_context,
    dissipation,
    frequency_ratio,
    lyapunov,
    monitors,
)
from .integrator import final_state, simulate, step
from .smallness import (
    SmallnessResult,
    absorption_gap,
    absorption_margin,
    absorption_threshold,
    dissipation_bound,
    dissipation_integral,
    is_nonincreasing,
    smallness_check,
    smallness_threshold,
    smallness_value,
)
from .local_existence import LocalExistenceTime, envelope_E, local_existence_time, predicted_T0
from .stability import GapTrace, two_solution_gap
from .convergence import ConvergenceStudy, self_convergence_order

__all__ = [
    'Constants',
    'InitialMode',
    'RandomInit',
    'SimConfig',
    'WeightKind',
    'config_digest',
    'TRACE_COLUMNS',
    'EnergyRecord',
    'EnergyTrace',
    'SolverContext',
    'TerminationReason',
    'build_context',
    'dissipation',
    'frequency_ratio',
    'lyapunov',
    'monitors',
    'final_state',
    'simulate',
    'step',
    'SmallnessResult',
    'absorption_gap',
    'absorption_margin',
    'absorption_threshold',
    'dissipation_bound',
    'dissipation_integral',
    'is_nonincreasing',
    'smallness_check',
    'smallness_threshold',
    'smallness_value',
    'LocalExistenceTime',
    'envelope_E',
    'local_existence_time',
    'predicted_T0',
    'GapTrace',
    'two_solution_gap',
    'ConvergenceStudy',
    'self_convergence_order',
]
