import math

import numpy as np
import pytest

from muskat.norms import (
    NormRoute,
    NormSpec,
    evaluate_norm,
    log_sobolev_norm,
    log_weighted_seminorm,
    sobolev_norm,
    weighted_norm,
)
from muskat.spectral import GridFunction


def test_single_mode_sobolev_seminorm(grid):
    f = GridFunction.from_function(grid, lambda x: np.sin(2 * x))
    assert sobolev_norm(f, 1.0) == pytest.approx(2.0 * f.l2_norm(), rel=1e-12)


def test_constants_have_zero_homogeneous_norm(grid):
    assert sobolev_norm(GridFunction.constant(grid, 4.0), 0.75) == 0.0


def test_order_zero_inhomogeneous_norm_is_l2(grid, random_field):
    for _ in range(20):
        f = random_field() + 0.3
        assert sobolev_norm(f, 0.0, homogeneous=False) == pytest.approx(f.l2_norm(), rel=1e-12)


def test_log_norm_without_log_is_sobolev(grid, random_field):
    f = random_field()
    assert log_sobolev_norm(f, 1.5, 0.0) == pytest.approx(sobolev_norm(f, 1.5, homogeneous=False), rel=1e-12)


def test_log_norm_on_single_mode(grid):
    k, s, a = 5.0, 1.5, 1.0 / 3.0
    f = GridFunction.from_modes(grid, [(k, 1.0, 0.2)])
    expected = math.sqrt((1 + k ** 2) ** s * math.log(4 + k) ** (2 * a)) * f.l2_norm()
    assert log_sobolev_norm(f, s, a) == pytest.approx(expected, rel=1e-12)


def test_log_norm_increases_with_exponent(random_field):
    f = random_field()
    values = [log_sobolev_norm(f, 1.0, a) for a in (0.0, 0.25, 0.5, 1.0)]
    assert values == sorted(values)


def test_log_norm_rejects_negative_orders(random_field):
    with pytest.raises(ValueError):
        log_sobolev_norm(random_field(), -0.5, 0.0)


def test_weighted_norm_of_zero(grid, phi_third):
    assert weighted_norm(GridFunction.zeros(grid), 1.5, phi_third) == 0.0


def test_weighted_norm_on_single_mode(grid, phi_third):
    k = 6.0
    f = GridFunction.from_modes(grid, [(k, 0.5, 0.0)])
    expected = k ** 1.5 * float(phi_third(k)) * f.l2_norm()
    assert weighted_norm(f, 1.5, phi_third) == pytest.approx(expected, rel=1e-12)


def test_energy_ratio_is_frequency_on_single_mode(grid, phi_third):
    for k in (1.0, 4.0, 9.0):
        f = GridFunction.from_modes(grid, [(k, 0.1, 0.0)])
        A = weighted_norm(f, 1.5, phi_third) ** 2
        B = weighted_norm(f, 2.0, phi_third) ** 2
        assert B / A == pytest.approx(k, rel=1e-12)


def test_dispatcher_spectral_route(random_field, phi_third):
    f = random_field()
    assert evaluate_norm(f, NormSpec(s=0.5)).value == pytest.approx(sobolev_norm(f, 0.5))
    value = evaluate_norm(f, NormSpec(s=1.5, phi=phi_third))
    assert value.route is NormRoute.SPECTRAL
    assert value.tail_bound == 0.0
    assert value.value == pytest.approx(weighted_norm(f, 1.5, phi_third))


def test_norm_spec_rejects_conflicting_weights(phi_third):
    with pytest.raises(ValueError):
        NormSpec(s=1.5, weight_a=0.5, phi=phi_third)
    with pytest.raises(ValueError):
        NormSpec(s=1.5, route=NormRoute.FINITE_DIFFERENCE, m=1)
    with pytest.raises(ValueError):
        NormSpec(s=0.5, route=NormRoute.FINITE_DIFFERENCE, p=0.5)


def test_log_weighted_seminorm_on_single_mode(grid):
    k, s, a = 6.0, 1.5, 1.0 / 3.0
    f = GridFunction.from_modes(grid, [(k, 0.5, 0.1)]) + 2.0
    expected = k ** s * math.log(4 + k) ** a * (f - 2.0).l2_norm()
    assert log_weighted_seminorm(f, s, a) == pytest.approx(expected, rel=1e-12)
