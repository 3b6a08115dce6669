"""
Pseudospectral toolkit for the Muskat equation with critical logarithmic
weights, and a harness that checks its estimates numerically.
"""

__version__ = "0.1.0"
