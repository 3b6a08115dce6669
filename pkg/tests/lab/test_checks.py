import math

import numpy as np
import pytest

from muskat.lab import (
    FixedEnsemble,
    RandomEnsemble,
    check_commutator_D1phi,
    check_hilbert_commutator,
    check_norm_equivalence,
    check_R_bound,
    check_Tf_bound,
    check_V_bound,
    check_V_linf,
    fourier_l1_derivative,
    hilbert_commutator,
)
from muskat.nonlinearity import build_alpha_quadrature
from muskat.spectral import GridFunction, make_grid
from muskat.weights import kappa_power_log


@pytest.fixture(scope="module")
def ensemble():
    return RandomEnsemble(make_grid(math.pi, 32), size=5, decay=2.0, seed=11, amplitude=0.5)


@pytest.fixture(scope="module")
def quad(ensemble):
    return build_alpha_quadrature(ensemble.grid, nodes_per_decade=16)


def _finite_report(report, expected_count):
    assert report.count == expected_count
    assert report.excluded == 0
    assert all(np.isfinite(r) and r >= 0 for r in report.ratios)
    assert report.max_ratio < np.inf


def test_fourier_l1_of_a_cosine(grid):
    f = GridFunction.from_modes(grid, [(3, 0.5, 0.2)])
    # 0.5 cos(3x + 0.2) has two modes of size 0.25 at |k| = 3
    assert fourier_l1_derivative(f) == pytest.approx(1.5, rel=1e-12)


def test_transport_bounds(ensemble, quad):
    _finite_report(check_V_bound(ensemble, quad), 5)
    report = check_V_linf(ensemble, quad)
    _finite_report(report, 5)
    assert report.ensemble["seed"] == 11


def test_T_and_remainder_bounds(ensemble, quad):
    _finite_report(check_Tf_bound(ensemble, quad), 5)
    _finite_report(check_R_bound(ensemble, quad), 5)


def test_commutator_bounds(ensemble, quad, phi_third):
    _finite_report(check_hilbert_commutator(ensemble), 5)
    report = check_commutator_D1phi(ensemble, kappa_power_log(1.0 / 3.0), phi_third, quad)
    _finite_report(report, 5)
    assert report.ensemble["kappa"] == "power-log(a=0.333333)"


def test_hilbert_commutator_vanishes_for_constant_multiplier():
    grid = make_grid(math.pi, 32)
    g1 = GridFunction.constant(grid, 2.0)
    g2 = GridFunction.from_modes(grid, [(2, 1.0, 0.0)])
    assert hilbert_commutator(g1, g2).max_abs() <= 1e-12


def test_norm_equivalence_has_two_sided_bounds(ensemble, phi_third):
    report = check_norm_equivalence(ensemble, kappa_power_log(1.0 / 3.0), phi=phi_third)
    _finite_report(report, 5)
    assert report.min_ratio > 0
    assert report.ensemble["s"] == 1.5


def test_zero_fields_are_excluded(quad):
    grid = make_grid(math.pi, 32)
    ensemble = FixedEnsemble(grid, (GridFunction.zeros(grid), GridFunction.from_modes(grid, [(1, 0.1, 0.0)])))
    report = check_V_linf(ensemble, quad)
    assert report.count == 1
    assert report.excluded == 1
