"""
Utility helpers shared across the muskat package.
"""

from .quadrature import adaptive_integral, log_gauss_legendre, one_minus_cos_over_square

__all__ = [
    'adaptive_integral',
    'log_gauss_legendre',
    'one_minus_cos_over_square',
]
