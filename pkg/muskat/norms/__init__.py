"""
Norms by the spectral and finite-difference routes.

This package contains:
- Sobolev, fractional logarithmic and phi-weighted norms (spectral route)
- Gagliardo, Triebel-Lizorkin and Besov norms (finite-difference route)
- The constant c(s) linking F^s_{2,2} to H^s
- NormSpec and the evaluate_norm dispatcher
"""

from .constants import c_of_s, sobolev_finite_difference_constant
from .spectral_norms import (
    log_sobolev_norm,
    log_sobolev_weight,
    log_weighted_seminorm,
    sobolev_norm,
    sobolev_weight,
    weighted_norm,
)
from .finite_difference_norms import (
    FiniteDifferenceNorm,
    HMeshSpec,
    besov_norm,
    besov_norm_detailed,
    gagliardo_seminorm,
    gagliardo_seminorm_detailed,
    triebel_lizorkin_norm,
    triebel_lizorkin_norm_detailed,
)
from .norm_spec import DifferenceLayout, NormRoute, NormSpec, NormValue, evaluate_norm

__all__ = [
    'c_of_s',
    'sobolev_finite_difference_constant',
    'log_sobolev_norm',
    'log_sobolev_weight',
    'log_weighted_seminorm',
    'sobolev_norm',
    'sobolev_weight',
    'weighted_norm',
    'FiniteDifferenceNorm',
    'HMeshSpec',
    'besov_norm',
    'besov_norm_detailed',
    'gagliardo_seminorm',
    'gagliardo_seminorm_detailed',
    'triebel_lizorkin_norm',
    'triebel_lizorkin_norm_detailed',
    'DifferenceLayout',
    'NormRoute',
    'NormSpec',
    'NormValue',
    'evaluate_norm',
]
