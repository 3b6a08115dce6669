import math

import numpy as np
import pytest

from muskat.weights import (
    KappaFamily,
    KappaSampleSpec,
    degenerate_constant_kappa,
    kappa_from_table,
    kappa_power_log,
    validate_kappa,
)


def test_power_log_values():
    assert kappa_power_log(0.0)(123.0) == pytest.approx(1.0)
    assert kappa_power_log(1.0)(math.e - 4.0) == pytest.approx(1.0, rel=1e-15)
    assert kappa_power_log(1.0 / 3.0)(0.0) == pytest.approx(math.log(4.0) ** (1.0 / 3.0), rel=1e-15)


@pytest.mark.parametrize("a", [-0.1, 1.5, float("nan")])
def test_power_log_rejects_exponents_outside_unit_interval(a):
    with pytest.raises(ValueError):
        kappa_power_log(a)


def test_third_power_log_passes_hypotheses():
    report = validate_kappa(kappa_power_log(1.0 / 3.0))
    assert report.h1_pass
    assert report.h3_pass
    assert report.h2_c0 <= 2.0 ** (1.0 / 3.0) + 1e-9
    assert report.passed


def test_constant_weight_fails_growth():
    report = validate_kappa(degenerate_constant_kappa())
    assert not report.h1_pass
    assert not report.passed
    assert report.to_dict()["h1"]["pass"] is False


def test_full_log_has_constant_h3_ratio():
    report = validate_kappa(kappa_power_log(1.0))
    assert report.h3_pass
    assert report.details["h3_ratio_min"] == pytest.approx(1.0, rel=1e-12)
    assert report.details["h3_ratio_max"] == pytest.approx(1.0, rel=1e-12)


def test_table_weight_reports_violation_location():
    kappa = kappa_from_table([0.0, 10.0, 1e3, 1e9], [1.0, 5.0, 5.5, 6.0])
    assert kappa.family is KappaFamily.PIECEWISE_TABLE
    report = validate_kappa(kappa, KappaSampleSpec(nodes_per_decade=16))
    # the jump to 5 on [0, 10] grows faster than log(4 + r)
    assert not report.h3_pass
    assert report.h3_worst_r is not None and report.h3_worst_r <= 10.0


def test_degenerate_constant_below_one_is_rejected():
    with pytest.raises(ValueError):
        degenerate_constant_kappa(0.5)


def test_kappa_is_vectorized():
    r = np.array([0.0, 1.0, 1e6])
    values = kappa_power_log(0.5)(r)
    np.testing.assert_allclose(values, np.log(4.0 + r) ** 0.5)
