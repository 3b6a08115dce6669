"""
Weight adapted to an initial datum.

The spectral mass |xi|^3 log(4 + |xi|^2)^(2/3) |f0_hat|^2 defines omega;
eta built from omega gives k_tilde and kappa_0(r) = log(4 + r)^(1/3) * k_tilde(r).
"""
import logging
from dataclasses import dataclass

import numpy as np

from ..spectral import GridFunction
from .eta import Eta, IntegrableWeight, build_eta
from .kappa import Kappa, KappaFamily

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DataAdaptedEvaluator:
    eta: Eta

    def __call__(self, r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        return np.log(4.0 + r) ** (1.0 / 3.0) * self.eta(r)


def spectral_mass(f0: GridFunction) -> np.ndarray:
    """Per-bin mass of omega on the nonnegative wavenumbers (both signs folded in)."""
    grid = f0.grid
    k = grid.half_wavenumbers
    power = grid.parseval_factor * grid.mode_multiplicity * np.abs(f0.spectrum) ** 2
    return k ** 3 * np.log(4.0 + k ** 2) ** (2.0 / 3.0) * power


def spectral_weight(f0: GridFunction) -> IntegrableWeight:
    """omega as a discrete measure on the grid wavenumbers."""
    k = f0.grid.half_wavenumbers
    mass = spectral_mass(f0)

    def tail(alpha: float) -> float:
        return float(np.sum(mass[k >= alpha]))

    return IntegrableWeight(tail_mass=tail, name="initial-datum spectral mass")


def data_adapted_kappa(f0: GridFunction, search_budget: int = 4096) -> Kappa:
    """
    kappa_0 for the initial datum f0.

    Raises:
        NotIntegrableError: propagated from build_eta
    """
    eta = build_eta(spectral_weight(f0), search_budget=search_budget)
    logger.info("data-adapted weight: %d representable breakpoints, log(alpha_1)=%.4g",
                len(eta.log_breakpoints), eta.log_breakpoints[0] if eta.log_breakpoints else float("nan"))
    return Kappa(DataAdaptedEvaluator(eta), KappaFamily.DATA_ADAPTED,
                 (("log_breakpoints", eta.log_breakpoints), ("tail_masses", eta.tail_masses)))


def enhanced_integrability(f0: GridFunction, kappa0: Kappa) -> float:
    """Sum of |xi|^3 log(4 + |xi|^2)^(2/3) k_tilde(|xi|)^2 |f0_hat|^2 over the grid."""
    if kappa0.family is not KappaFamily.DATA_ADAPTED:
        raise ValueError(f"expected a data-adapted weight, got {kappa0}")
    k = f0.grid.half_wavenumbers
    eta = kappa0.evaluator.eta
    return float(np.sum(spectral_mass(f0) * eta(k) ** 2))
