"""
Spectral core for the periodic Muskat toolkit.

This package contains:
- Grid: the torus [-L, L) with N points
- GridFunction: immutable real fields with a lazily computed spectrum
- SymbolFn and symbol factories for Fourier multipliers
- Spectral operators (H, Lambda, derivative, J_n, shifts, finite differences, slopes)
"""

from .grid import Grid, make_grid
from .grid_function import GridFunction
from .symbols import (
    Parity,
    SymbolFn,
    derivative_symbol,
    hilbert_symbol,
    lambda_symbol,
    power_symbol,
    weighted_symbol,
)
from .operators import (
    apply_multiplier,
    cutoff_mask,
    dealiased_product,
    derivative,
    finite_difference,
    hilbert_transform,
    inner_product,
    lambda_operator,
    project_Jn,
    shift,
    slope,
    symmetric_second_difference,
    truncate_two_thirds,
)

__all__ = [
    'Grid',
    'make_grid',
    'GridFunction',
    'Parity',
    'SymbolFn',
    'derivative_symbol',
    'hilbert_symbol',
    'lambda_symbol',
    'power_symbol',
    'weighted_symbol',
    'apply_multiplier',
    'cutoff_mask',
    'dealiased_product',
    'derivative',
    'finite_difference',
    'hilbert_transform',
    'inner_product',
    'lambda_operator',
    'project_Jn',
    'shift',
    'slope',
    'symmetric_second_difference',
    'truncate_two_thirds',
]
