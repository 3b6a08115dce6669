import math

import numpy as np
import pytest

from muskat.solver import (
    EnergyRecord,
    SimConfig,
    absorption_gap,
    absorption_margin,
    absorption_threshold,
    envelope_E,
    local_existence_time,
    predicted_T0,
    smallness_check,
    smallness_threshold,
    smallness_value,
    two_solution_gap,
)
from muskat.spectral import GridFunction, make_grid
from muskat.weights import data_adapted_kappa


def test_zero_datum_passes_with_full_margin(grid):
    result = smallness_check(GridFunction.zeros(grid), c0=0.05)
    assert result.passed
    assert result.margin == 0.05


def test_default_constant_admits_small_cosine():
    f0 = GridFunction.from_function(make_grid(math.pi, 64), lambda x: 0.01 * np.cos(x))
    assert smallness_check(f0).passed


def test_small_cosine_fails_on_the_long_torus():
    f0 = GridFunction.from_modes(make_grid(16 * math.pi, 256), [(1.0, 0.01, 0.0)])
    result = smallness_check(f0)
    assert not result.passed
    assert result.margin < 0


def test_threshold_matches_direct_evaluation(random_field):
    f = random_field(max_mode=6, decay=2.0)
    eps = smallness_threshold(f, c0=0.05)
    assert smallness_value(f * eps) == pytest.approx(0.05, rel=1e-10)
    assert smallness_check(f * (0.99 * eps)).passed
    assert not smallness_check(f * (1.01 * eps)).passed


def test_threshold_needs_a_nonzero_seminorm(grid):
    with pytest.raises(ValueError):
        smallness_threshold(GridFunction.constant(grid, 1.0))


def test_absorption_helpers():
    assert absorption_threshold(1.0, 1.0) == pytest.approx(1.0 / 16.0)
    zero = EnergyRecord(0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0)
    assert absorption_margin(zero, 0.0, 1.0, 1.0) == 0.5
    assert absorption_gap(zero, 0.0, 1.0, 1.0) == pytest.approx(0.5)
    large = EnergyRecord(0.0, 1.0, 4.0, 40.0, 0.5, 0.5, 0.0)
    assert absorption_margin(large, 1.0, 1.0, 1.0) < 0


@pytest.fixture(scope="module")
def data_adapted_datum():
    grid = make_grid(math.pi, 32)
    # large enough for the envelope to be positive with C1 = C2 = 1
    f0 = GridFunction.from_modes(grid, [(1, 0.5, 0.0), (2, 0.2, 0.3)])
    return f0, data_adapted_kappa(f0)


def test_zero_datum_exists_forever(data_adapted_datum):
    f0, kappa0 = data_adapted_datum
    assert predicted_T0(GridFunction.zeros(f0.grid), kappa0) == math.inf


def test_envelope_grows_with_energy(data_adapted_datum):
    f0, kappa0 = data_adapted_datum
    m = f0.l2_norm() ** 2
    values = [envelope_E(rho, m, kappa0) for rho in np.logspace(-4, 2, 25)]
    assert np.all(np.diff(values) >= -1e-12 * np.maximum(1.0, np.abs(values[1:])))


def test_amplified_datum_exists_for_less_time(data_adapted_datum):
    f0, kappa0 = data_adapted_datum
    base = local_existence_time(f0, kappa0)
    amplified = local_existence_time(2.0 * f0, kappa0)
    assert 0 < base.T0 < math.inf
    assert amplified.T0 < base.T0
    assert amplified.M0 == pytest.approx(4.0 * base.M0)


def test_envelope_rejects_negative_arguments(data_adapted_datum):
    _, kappa0 = data_adapted_datum
    with pytest.raises(ValueError):
        envelope_E(-1.0, 0.0, kappa0)


@pytest.fixture
def gap_config():
    return SimConfig(half_length=math.pi, size=32, final_time=0.25, alpha_nodes_per_decade=16)


def test_identical_data_have_no_gap(gap_config):
    f0 = GridFunction.from_modes(gap_config.grid, [(1, 0.05, 0.0), (3, 0.01, 1.0)])
    trace = two_solution_gap(f0, f0, gap_config)
    assert max(trace.gaps) <= 1e-13
    assert len(trace.times) == gap_config.step_count + 1


def test_gap_is_symmetric_and_within_budget(gap_config):
    grid = gap_config.grid
    f1 = GridFunction.from_modes(grid, [(1, 0.05, 0.0), (3, 0.01, 1.0)])
    f2 = f1 + GridFunction.from_modes(grid, [(1, 1e-4, 0.0)])
    forward = two_solution_gap(f1, f2, gap_config)
    backward = two_solution_gap(f2, f1, gap_config)
    np.testing.assert_allclose(forward.gaps, backward.gaps, rtol=1e-6)
    assert forward.initial_gap > 0
    assert forward.within_budget()
    assert np.all(np.isfinite(forward.premise))


def test_gap_requires_the_configured_grid(gap_config):
    other = GridFunction.zeros(make_grid(math.pi, 64))
    with pytest.raises(ValueError):
        two_solution_gap(other, other, gap_config)
