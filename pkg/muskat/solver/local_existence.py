"""
Local existence time for data-adapted weights.

With A(t) the weighted H^{3/2} energy, dA/dt <= E(A, ||f0||^2) where

    E(rho, m) = sup_{r >= 0} { C2 (sqrt(rho) + rho) r / kappa0(r/rho)
                               - (C1/2) r / (1 + log(4 + r/rho)^(1/3) (rho + m)) }

and kappa0 = log(4 + .)^(1/3) k_tilde. The supremum is taken on a log mesh of
r/rho together with r = 0, so E >= 0. The time T0 = M0 / E(2 M0, ||f0||^2).
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..norms import weighted_norm
from ..spectral import GridFunction
from ..weights import Kappa, Phi, tabulate_phi
from .energy import phi_range_for

logger = logging.getLogger(__name__)

RATIO_MESH = (1e-6, 1e12)
RATIO_NODES_PER_DECADE = 64


def _ratio_mesh(bounds: Tuple[float, float] = RATIO_MESH, density: int = RATIO_NODES_PER_DECADE) -> np.ndarray:
    lower, upper = bounds
    count = int(math.ceil(math.log10(upper / lower) * density)) + 1
    return np.logspace(math.log10(lower), math.log10(upper), count)


@dataclass(frozen=True)
class Envelope:
    value: float
    maximizer: float
    at_mesh_edge: bool

    @property
    def degenerate(self) -> bool:
        return self.value <= 0.0


def envelope_details(rho: float, m: float, kappa0: Kappa, C1: float = 1.0, C2: float = 1.0,
                     bounds: Tuple[float, float] = RATIO_MESH) -> Envelope:
    if rho < 0 or m < 0:
        raise ValueError(f"rho and m must be nonnegative, got rho={rho}, m={m}")
    if rho == 0:
        return Envelope(0.0, 0.0, False)
    s = _ratio_mesh(bounds)
    log_factor = np.log(4.0 + s) ** (1.0 / 3.0)
    bracket = C2 * (math.sqrt(rho) + rho) / kappa0(s) - 0.5 * C1 / (1.0 + log_factor * (rho + m))
    values = rho * s * bracket
    best = int(np.argmax(values))
    if values[best] <= 0:
        return Envelope(0.0, 0.0, False)
    return Envelope(float(values[best]), float(rho * s[best]), best in (0, s.size - 1))


def envelope_E(rho: float, m: float, kappa0: Kappa, C1: float = 1.0, C2: float = 1.0) -> float:
    """E(rho, m), including the r = 0 value so that E >= 0."""
    return envelope_details(rho, m, kappa0, C1, C2).value


@dataclass(frozen=True)
class LocalExistenceTime:
    T0: float
    M0: float
    envelope: float
    degenerate: bool
    at_mesh_edge: bool


def local_existence_time(f0: GridFunction, kappa0: Kappa, C1: float = 1.0, C2: float = 1.0,
                         phi0: Optional[Phi] = None) -> LocalExistenceTime:
    """
    T0 = M0 / E(2 M0, ||f0||^2) with M0 = ||<D>^{3/2, phi0} f0||^2.

    f0 = 0 and a vanishing envelope both give T0 = inf; the latter is flagged
    as degenerate.
    """
    phi0 = phi0 or tabulate_phi(kappa0, lambda_range=phi_range_for(f0.grid))
    M0 = weighted_norm(f0, 1.5, phi0) ** 2
    if M0 == 0:
        return LocalExistenceTime(math.inf, 0.0, 0.0, False, False)
    envelope = envelope_details(2.0 * M0, f0.l2_norm() ** 2, kappa0, C1, C2)
    if envelope.degenerate:
        logger.warning("envelope vanishes on the mesh for M0=%.4g; T0 reported as infinite", M0)
        return LocalExistenceTime(math.inf, M0, 0.0, True, False)
    if envelope.at_mesh_edge:
        logger.info("envelope supremum attained at the mesh edge r=%.4g", envelope.maximizer)
    return LocalExistenceTime(M0 / envelope.value, M0, envelope.value, False, envelope.at_mesh_edge)


def predicted_T0(f0: GridFunction, kappa0: Kappa, C1: float = 1.0, C2: float = 1.0) -> float:
    return local_existence_time(f0, kappa0, C1, C2).T0
