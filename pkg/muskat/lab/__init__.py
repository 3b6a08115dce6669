"""
Empirical verification of the estimates as LHS/RHS ratio statistics.

This package contains:
- RatioReport: per-sample ratios with exclusion counts
- RandomEnsemble/FixedEnsemble: seeded field collections
- Ratio checks for V, T, R, the commutators and the norm equivalence
- check_hardy, check_interpolation and its ensemble form, check_energy_inequality
- BaselineStore: stored baselines with drift comparison
"""

from .ratio_report import RatioReport, RatioSample, build_ratio_report
from .ensemble import Ensemble, FixedEnsemble, RandomEnsemble
from .checks import (
    check_commutator_D1phi,
    check_hilbert_commutator,
    check_norm_equivalence,
    check_R_bound,
    check_Tf_bound,
    check_V_bound,
    check_V_linf,
    commutator_D1phi,
    fourier_l1_derivative,
    hilbert_commutator,
)
from .hardy import HardyResult, check_hardy
from .interpolation import InterpolationRecord, check_interpolation, check_interpolation_ensemble
from .energy_inequality import EnergyInequalityReport, check_energy_inequality, energy_Q
from .baselines import BaselineStore, DriftResult

__all__ = [
    'RatioReport',
    'RatioSample',
    'build_ratio_report',
    'Ensemble',
    'FixedEnsemble',
    'RandomEnsemble',
    'check_commutator_D1phi',
    'check_hilbert_commutator',
    'check_norm_equivalence',
    'check_R_bound',
    'check_Tf_bound',
    'check_V_bound',
    'check_V_linf',
    'commutator_D1phi',
    'fourier_l1_derivative',
    'hilbert_commutator',
    'HardyResult',
    'check_hardy',
    'InterpolationRecord',
    'check_interpolation',
    'check_interpolation_ensemble',
    'EnergyInequalityReport',
    'check_energy_inequality',
    'energy_Q',
    'BaselineStore',
    'DriftResult',
]
