import math

import numpy as np
import pytest

from muskat.errors import OutOfRangeError
from muskat.weights import (
    degenerate_constant_kappa,
    kappa_power_log,
    phi_from_kappa,
    tabulate_phi,
)


def test_constant_weight_gives_half_pi():
    for lam in (0.0, 1.0, 250.0):
        assert phi_from_kappa(degenerate_constant_kappa(), lam) == pytest.approx(math.pi / 2, abs=1e-8)


@pytest.mark.parametrize("a", [1.0 / 3.0, 0.5, 1.0])
def test_phi_at_zero_scales_by_kappa_at_zero(a):
    expected = (math.pi / 2) * math.log(4.0) ** a
    assert phi_from_kappa(kappa_power_log(a), 0.0) == pytest.approx(expected, abs=1e-8)


def test_phi_grows_with_lambda():
    kappa = kappa_power_log(1.0 / 3.0)
    for lam in (1.0, 10.0, 1e3):
        assert phi_from_kappa(kappa, 2 * lam) >= phi_from_kappa(kappa, lam)


def test_negative_lambda_is_rejected():
    with pytest.raises(ValueError):
        phi_from_kappa(kappa_power_log(0.5), -1.0)


def test_table_bounds_for_third_power_log():
    phi = tabulate_phi(kappa_power_log(1.0 / 3.0), lambda_range=(1e-3, 1e6), density=8)
    assert phi.c_lower >= 0.45
    assert np.isfinite(phi.c_upper)
    assert phi.c_upper <= 10.0
    assert np.all(np.diff(phi.values) >= 0.0)
    assert phi.doubling_constant() <= 2.0


def test_constant_table_is_flat():
    phi = tabulate_phi(degenerate_constant_kappa(), lambda_range=(1e-2, 1e3), density=4, allow_degenerate=True)
    assert phi.c_lower == pytest.approx(math.pi / 2, abs=1e-6)
    assert phi.c_upper == pytest.approx(math.pi / 2, abs=1e-6)


def test_constant_table_requires_opt_in():
    with pytest.raises(ValueError):
        tabulate_phi(degenerate_constant_kappa(), lambda_range=(1e-2, 1e3), density=4)


def test_interpolation_stays_monotone_between_nodes(phi_third):
    lam = np.linspace(0.0, phi_third.lambda_max, 2001)
    values = phi_third(lam)
    assert np.all(np.diff(values) >= -1e-15)


def test_evaluation_outside_table_raises(phi_third):
    with pytest.raises(OutOfRangeError):
        phi_third(2.0 * phi_third.lambda_max)


def test_summary_reports_constants(phi_third):
    summary = phi_third.summary()
    assert summary["c_lower"] == pytest.approx(phi_third.c_lower)
    assert summary["nodes"] == phi_third.lambdas.size
    assert summary["lambda_range"][1] == pytest.approx(1e3)
