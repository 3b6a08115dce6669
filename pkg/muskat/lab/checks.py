"""
Ratio checks for the estimates on V, T, R, the commutators and the
equivalence between the finite-difference and spectral weighted norms.
"""
import logging
from typing import Optional

import numpy as np

from ..nonlinearity import AlphaQuadrature, T_apply, build_alpha_quadrature, remainder_R, transport_coeff_V
from ..norms import HMeshSpec, gagliardo_seminorm, sobolev_norm, weighted_norm
from ..spectral import (
    GridFunction,
    apply_multiplier,
    dealiased_product,
    derivative,
    hilbert_transform,
    weighted_symbol,
)
from ..weights import Kappa, Phi, tabulate_phi
from ..solver.energy import phi_range_for
from .ensemble import Ensemble
from .ratio_report import RatioReport, build_ratio_report

logger = logging.getLogger(__name__)


def _quad_for(ensemble: Ensemble, quad: Optional[AlphaQuadrature]) -> AlphaQuadrature:
    return quad or build_alpha_quadrature(ensemble.grid)


def fourier_l1_derivative(f: GridFunction) -> float:
    """sum over all modes of |k| |f_hat(k)| with f = sum f_hat(k) e^{ikx}."""
    grid = f.grid
    return float(np.sum(grid.mode_multiplicity * grid.half_wavenumbers * np.abs(f.spectrum)) / grid.size)


def check_V_bound(ensemble: Ensemble, quad: Optional[AlphaQuadrature] = None) -> RatioReport:
    """||V(f)||_{H^1} against ||f||_{H^2} + ||f||_{H^{7/4}}^2."""
    quad = _quad_for(ensemble, quad)

    def sample(f: GridFunction):
        lhs = sobolev_norm(transport_coeff_V(f, quad), 1.0)
        rhs = sobolev_norm(f, 2.0) + sobolev_norm(f, 1.75) ** 2
        return lhs, rhs

    return build_ratio_report("V_bound", (sample(f) for f in ensemble.fields()), ensemble.describe())


def check_V_linf(ensemble: Ensemble, quad: Optional[AlphaQuadrature] = None) -> RatioReport:
    """||V(f)||_{L^inf} against sum |k| |f_hat(k)|."""
    quad = _quad_for(ensemble, quad)
    pairs = ((transport_coeff_V(f, quad).max_abs(), fourier_l1_derivative(f)) for f in ensemble.fields())
    return build_ratio_report("V_linf", pairs, ensemble.describe())


def _weighted(f: GridFunction, s: float, phi: Phi, power: int = 1) -> GridFunction:
    return apply_multiplier(f, weighted_symbol(s, phi, power))


def commutator_D1phi(f: GridFunction, g: GridFunction, phi: Phi, quad: AlphaQuadrature) -> GridFunction:
    """[<D>^{1,phi}, T(f)] g."""
    return _weighted(T_apply(f, g, quad), 1.0, phi) - T_apply(f, _weighted(g, 1.0, phi), quad)


def check_commutator_D1phi(ensemble: Ensemble, kappa: Kappa, phi: Optional[Phi] = None,
                           quad: Optional[AlphaQuadrature] = None) -> RatioReport:
    """
    ||[<D>^{1,phi}, T(f)] g||_{L2} against
    ||g||_{7/4} ||<D>^{7/4,phi} f|| + ||g||_{7/4} ||<D>^{7/4,phi^2} f||^{1/2} ||f||_{19/12}^{3/2}
      + ||<D>^{7/4,phi^2} g||^{1/2} ||g||_{7/4}^{1/2} ||f||_{7/4}.
    """
    quad = _quad_for(ensemble, quad)
    phi = phi or tabulate_phi(kappa, lambda_range=phi_range_for(ensemble.grid), allow_degenerate=True)

    def sample(f: GridFunction, g: GridFunction):
        lhs = commutator_D1phi(f, g, phi, quad).l2_norm()
        g_74 = sobolev_norm(g, 1.75)
        rhs = (g_74 * weighted_norm(f, 1.75, phi)
               + g_74 * weighted_norm(f, 1.75, phi, 2) ** 0.5 * sobolev_norm(f, 19.0 / 12.0) ** 1.5
               + weighted_norm(g, 1.75, phi, 2) ** 0.5 * g_74 ** 0.5 * sobolev_norm(f, 1.75))
        return lhs, rhs

    describe = dict(ensemble.describe(), kappa=kappa.label)
    return build_ratio_report("commutator_D1phi", (sample(f, g) for f, g in ensemble.pairs()), describe)


def check_R_bound(ensemble: Ensemble, quad: Optional[AlphaQuadrature] = None) -> RatioReport:
    """||R(f, g)||_{L2} against ||g||_{H^{3/4}} ||f||_{H^{7/4}}."""
    quad = _quad_for(ensemble, quad)
    pairs = ((remainder_R(f, g, quad).l2_norm(), sobolev_norm(g, 0.75) * sobolev_norm(f, 1.75))
             for f, g in ensemble.pairs())
    return build_ratio_report("R_bound", pairs, ensemble.describe())


def hilbert_commutator(g1: GridFunction, g2: GridFunction) -> GridFunction:
    """[H, g1](d_x g2) with dealiased products."""
    g2_x = derivative(g2)
    return hilbert_transform(dealiased_product(g1, g2_x)) - dealiased_product(g1, hilbert_transform(g2_x))


def check_hilbert_commutator(ensemble: Ensemble) -> RatioReport:
    """||[H, g1](d_x g2)||_{L2} against ||g1||_{H^1} ||g2||_{H^{1/2}}."""
    pairs = ((hilbert_commutator(g1, g2).l2_norm(), sobolev_norm(g1, 1.0) * sobolev_norm(g2, 0.5))
             for g1, g2 in ensemble.pairs())
    return build_ratio_report("hilbert_commutator", pairs, ensemble.describe())


def check_Tf_bound(ensemble: Ensemble, quad: Optional[AlphaQuadrature] = None) -> RatioReport:
    """||T(f)f||_{H^1} against (||f||_{3/2} + ||f||_{3/2}^2 + 1 + ||V(f)||_inf) ||f||_{H^2}."""
    quad = _quad_for(ensemble, quad)

    def sample(f: GridFunction):
        lhs = sobolev_norm(T_apply(f, f, quad), 1.0)
        f_32 = sobolev_norm(f, 1.5)
        rhs = (f_32 + f_32 ** 2 + 1.0 + transport_coeff_V(f, quad).max_abs()) * sobolev_norm(f, 2.0)
        return lhs, rhs

    return build_ratio_report("Tf_bound", (sample(f) for f in ensemble.fields()), ensemble.describe())


def check_norm_equivalence(ensemble: Ensemble, kappa: Kappa, s: float = 1.5, phi: Optional[Phi] = None,
                           mesh: Optional[HMeshSpec] = None) -> RatioReport:
    """Weighted Gagliardo semi-norm against ||<D>^{s,phi} f||; both ratio bounds are meaningful."""
    phi = phi or tabulate_phi(kappa, lambda_range=phi_range_for(ensemble.grid))
    pairs = ((gagliardo_seminorm(f, s, kappa, mesh), weighted_norm(f, s, phi)) for f in ensemble.fields())
    describe = dict(ensemble.describe(), kappa=kappa.label, s=s)
    return build_ratio_report("norm_equivalence", pairs, describe)
