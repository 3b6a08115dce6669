import math

import numpy as np
import pytest
from scipy import integrate

from muskat.norms import (
    DifferenceLayout,
    HMeshSpec,
    NormRoute,
    NormSpec,
    besov_norm,
    c_of_s,
    evaluate_norm,
    gagliardo_seminorm,
    gagliardo_seminorm_detailed,
    sobolev_finite_difference_constant,
    sobolev_norm,
    triebel_lizorkin_norm,
    weighted_norm,
)
from muskat.spectral import GridFunction, make_grid
from muskat.weights import kappa_power_log


def test_c_of_one_half_is_pi():
    assert c_of_s(0.5) == pytest.approx(math.pi, abs=1e-8)


@pytest.mark.parametrize("s", [0.0, 1.0, -0.2])
def test_c_of_s_domain(s):
    with pytest.raises(ValueError):
        c_of_s(s)


def test_zero_field_has_zero_norms(grid):
    zero = GridFunction.zeros(grid)
    kappa = kappa_power_log(1.0 / 3.0)
    assert gagliardo_seminorm(zero, 1.5, kappa) == 0.0
    assert triebel_lizorkin_norm(zero, 0.5, 2, 2, 1) == 0.0
    assert besov_norm(zero, 1.5, 2, 3, 2) == 0.0


def test_besov_and_triebel_lizorkin_agree_when_p_equals_q(random_field):
    f = random_field(max_mode=8)
    for p in (2.0, 3.0):
        assert besov_norm(f, 0.5, p, p, 1) == pytest.approx(triebel_lizorkin_norm(f, 0.5, p, p, 1), rel=1e-10)


def test_finite_difference_route_matches_sobolev_at_one_half(rng):
    grid = make_grid(math.pi, 64)
    mesh = HMeshSpec(nodes_per_decade=64, h_min=1e-4)
    constant = sobolev_finite_difference_constant(0.5)
    for _ in range(5):
        modes = [(k, rng.uniform(0.2, 1.0), rng.uniform(0, 2 * math.pi)) for k in (2, 3, 4)]
        f = GridFunction.from_modes(grid, modes)
        finite_difference = triebel_lizorkin_norm(f, 0.5, 2, 2, 1, mesh) ** 2
        spectral = constant * sobolev_norm(f, 0.5) ** 2
        assert finite_difference == pytest.approx(spectral, rel=0.05)


def test_gagliardo_single_mode_against_quadrature(grid):
    k, s = 3.0, 1.5
    kappa = kappa_power_log(1.0 / 3.0)
    f = GridFunction.from_modes(grid, [(k, 1.0, 0.0)])
    detailed = gagliardo_seminorm_detailed(f, s, kappa, HMeshSpec(nodes_per_decade=256))

    def integrand(t):
        h = math.exp(t)
        return (2 - 2 * math.cos(k * h)) ** 2 * h ** (-2 * s) * float(kappa(1 / h)) ** 2

    reference, _ = integrate.quad(integrand, math.log(detailed.h_min), math.log(detailed.h_max), limit=400)
    expected = math.sqrt(2 * reference) * f.l2_norm()
    assert detailed.value == pytest.approx(expected, rel=1e-6)
    assert detailed.tail_bound >= 0.0


def test_besov_single_mode_against_quadrature(grid):
    k, s, p, q, m = 2.0, 1.25, 2.0, 3.0, 2
    mesh = HMeshSpec(nodes_per_decade=256)
    f = GridFunction.from_modes(grid, [(k, 1.0, 0.0)])
    lower, upper = mesh.bounds(grid)

    def integrand(t):
        h = math.exp(t)
        # ||delta_h^2 cos(kx)||_2 = |1 - e^{-ikh}|^2 ||cos||_2 = (2 - 2cos(kh)) ||cos||_2
        return ((2 - 2 * math.cos(k * h)) * f.l2_norm()) ** q * h ** (-q * s)

    reference, _ = integrate.quad(integrand, math.log(lower), math.log(upper), limit=400)
    assert besov_norm(f, s, p, q, m, mesh) == pytest.approx((2 * reference) ** (1 / q), rel=1e-6)


def test_gagliardo_is_equivalent_to_weighted_norm(grid, rng, phi_third):
    kappa = kappa_power_log(1.0 / 3.0)
    ratios = []
    for _ in range(100):
        f = GridFunction.random_band_limited(grid, rng, 12, decay=2.0)
        ratios.append(gagliardo_seminorm(f, 1.5, kappa) / weighted_norm(f, 1.5, phi_third))
    assert 0.0 < min(ratios) <= max(ratios) < np.inf
    assert max(ratios) / min(ratios) < 10.0


def test_equivalence_ratios_are_stable_under_mesh_doubling(grid, rng, phi_third):
    kappa = kappa_power_log(1.0 / 3.0)
    coarse, fine = HMeshSpec(nodes_per_decade=32), HMeshSpec(nodes_per_decade=64)
    for _ in range(10):
        f = GridFunction.random_band_limited(grid, rng, 12, decay=2.0)
        spectral = weighted_norm(f, 1.5, phi_third)
        before = gagliardo_seminorm(f, 1.5, kappa, coarse) / spectral
        after = gagliardo_seminorm(f, 1.5, kappa, fine) / spectral
        assert after == pytest.approx(before, rel=1e-2)


def test_zero_order_form_needs_power_log(grid):
    from muskat.weights import degenerate_constant_kappa
    f = GridFunction.from_modes(grid, [(2, 1.0, 0.0)])
    assert gagliardo_seminorm(f, 0.0, kappa_power_log(0.5)) > 0.0
    with pytest.raises(ValueError):
        gagliardo_seminorm(f, 0.0, degenerate_constant_kappa())
    with pytest.raises(ValueError):
        gagliardo_seminorm(f, 2.5, kappa_power_log(0.5))


def test_invalid_exponents_are_rejected(grid):
    f = GridFunction.from_modes(grid, [(2, 1.0, 0.0)])
    with pytest.raises(ValueError):
        triebel_lizorkin_norm(f, 1.5, 2, 2, 1)
    with pytest.raises(ValueError):
        besov_norm(f, 0.5, 0.5, 2, 1)


def test_dispatcher_finite_difference_route(random_field):
    f = random_field(max_mode=6)
    spec = NormSpec(s=0.5, route=NormRoute.FINITE_DIFFERENCE, layout=DifferenceLayout.BESOV, q=3.0)
    value = evaluate_norm(f, spec)
    assert value.route is NormRoute.FINITE_DIFFERENCE
    assert value.value == pytest.approx(besov_norm(f, 0.5, 2.0, 3.0, 1))
    assert value.tail_bound > 0.0
