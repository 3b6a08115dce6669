"""
Weight functions for the fractional logarithmic machinery.

This package contains:
- Kappa: weights under the growth hypotheses H1-H3 and their validation
- Phi: the integral transform of kappa, tabulated with monotone interpolation
- Eta: slowly growing weights adapted to an integrable omega
- data_adapted_kappa: the weight built from an initial datum's spectrum
"""

from .kappa import (
    Kappa,
    KappaFamily,
    KappaSampleSpec,
    KappaValidationReport,
    degenerate_constant_kappa,
    kappa_from_table,
    kappa_power_log,
    validate_kappa,
)
from .phi import Phi, phi_from_kappa, tabulate_phi
from .eta import Eta, IntegrableWeight, build_eta
from .data_adapted import data_adapted_kappa, enhanced_integrability, spectral_weight

__all__ = [
    'Kappa',
    'KappaFamily',
    'KappaSampleSpec',
    'KappaValidationReport',
    'degenerate_constant_kappa',
    'kappa_from_table',
    'kappa_power_log',
    'validate_kappa',
    'Phi',
    'phi_from_kappa',
    'tabulate_phi',
    'Eta',
    'IntegrableWeight',
    'build_eta',
    'data_adapted_kappa',
    'enhanced_integrability',
    'spectral_weight',
]
