import math

import numpy as np
import pytest

from muskat.lab import check_energy_inequality, energy_Q
from muskat.solver import RandomInit, SimConfig, simulate
from muskat.spectral import GridFunction


@pytest.fixture(scope="module")
def recorded_run():
    cfg = SimConfig(half_length=math.pi, size=32, final_time=0.25, alpha_nodes_per_decade=16,
                    init_random=RandomInit(amplitude=0.01, decay=3.0, max_mode=4), seed=5, keep_states=True)
    return cfg, simulate(cfg)


def test_report_covers_every_step(recorded_run):
    cfg, trace = recorded_run
    report = check_energy_inequality(trace, cfg)
    assert len(report.slacks) == len(trace.records) - 1
    assert len(report.monitor_slacks) == len(report.slacks)
    assert report.constant == cfg.constants.C2
    assert report.calibrated_constant >= 0.0
    assert set(report.to_dict()) >= {"constant", "calibrated_constant", "min_slack", "slacks"}


def test_calibrated_constant_closes_every_step(recorded_run):
    cfg, trace = recorded_run
    calibrated = check_energy_inequality(trace, cfg).calibrated_constant
    report = check_energy_inequality(trace, cfg, constant=calibrated)
    scale = 1.0 + max(abs(s) for s in check_energy_inequality(trace, cfg, constant=0.0).slacks)
    assert report.min_slack >= -1e-9 * scale


def test_dissipation_dominates_its_floor(recorded_run):
    cfg, trace = recorded_run
    report = check_energy_inequality(trace, cfg)
    diss = np.asarray(report.dissipations)
    floor = np.asarray(report.dissipation_floor)
    assert np.all(diss >= floor * (1.0 - 1e-10))
    assert np.all(diss <= np.asarray(trace.column("B")) * (1.0 + 1e-10))


def test_energy_Q_vanishes_only_at_zero(grid, phi_third):
    assert energy_Q(GridFunction.zeros(grid), phi_third) == 0.0
    assert energy_Q(GridFunction.from_modes(grid, [(2, 0.1, 0.0)]), phi_third) > 0.0


def test_requires_states(small_config):
    trace = simulate(small_config)
    with pytest.raises(ValueError):
        check_energy_inequality(trace, small_config)


def test_requires_every_step(small_config):
    cfg = small_config.with_changes(cadence=2, keep_states=True)
    trace = simulate(cfg)
    with pytest.raises(ValueError):
        check_energy_inequality(trace, cfg)
