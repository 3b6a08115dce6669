"""
The Muskat nonlinearity and its paralinearization.

This package contains:
- AlphaQuadrature: symmetric principal-value nodes in the difference variable
- muskat_rhs_direct, T_apply, transport_coeff_V, remainder_R and friends
- paralinearization_residual: the decomposition cross-check
- contraction_gap: the scalar contraction inequality
"""

from .alpha_quadrature import AlphaQuadrature, build_alpha_quadrature
from .muskat_operator import (
    T_apply,
    fraction_coefficient,
    hardy_chain,
    muskat_rhs_direct,
    odd_even_parts,
    quadrature_lambda,
    remainder_R,
    slope_derivatives,
    slopes,
    transport_coeff_V,
)
from .decomposition import DecompositionReport, paralinearization_residual
from .contraction import contraction_gap

__all__ = [
    'AlphaQuadrature',
    'build_alpha_quadrature',
    'T_apply',
    'fraction_coefficient',
    'hardy_chain',
    'muskat_rhs_direct',
    'odd_even_parts',
    'quadrature_lambda',
    'remainder_R',
    'slope_derivatives',
    'slopes',
    'transport_coeff_V',
    'DecompositionReport',
    'paralinearization_residual',
    'contraction_gap',
]
