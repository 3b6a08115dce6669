"""
Contraction inequality for the map x -> x^2/(1+x^2) on triples of reals.
"""
import numpy as np


def _fraction(x):
    return x * x / (1.0 + x * x)


def contraction_gap(x1, x2, x3):
    """
    (|x2 + x3 - 2 x1| + |x2 - x1|^2 + |x3 - x1|^2)
      - |2 F(x1) - F(x2) - F(x3)|,  F(x) = x^2/(1+x^2).

    Nonnegative up to rounding. Accepts scalars or broadcastable arrays.
    """
    x1, x2, x3 = (np.asarray(x, dtype=float) for x in (x1, x2, x3))
    right = np.abs(x2 + x3 - 2.0 * x1) + (x2 - x1) ** 2 + (x3 - x1) ** 2
    left = np.abs(2.0 * _fraction(x1) - _fraction(x2) - _fraction(x3))
    gap = right - left
    return float(gap) if gap.ndim == 0 else gap
