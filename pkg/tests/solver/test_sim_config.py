import math

import pytest

from muskat.solver import InitialMode, RandomInit, SimConfig, WeightKind


def test_defaults_resolve_cutoff_and_step():
    cfg = SimConfig(half_length=math.pi, size=32, final_time=1.0)
    assert cfg.n == pytest.approx(8.0)
    # 0.5 * min(1/n, spacing) = 1/16
    assert cfg.time_step == pytest.approx(1.0 / 16.0)
    assert cfg.step_count == 16


def test_uneven_final_time_is_split_into_equal_steps():
    cfg = SimConfig(half_length=math.pi, size=32, final_time=1.0, dt=0.3)
    assert cfg.step_count == 4
    assert cfg.time_step * cfg.step_count == pytest.approx(1.0)


@pytest.mark.parametrize("changes", [
    {"dt": 0.0},
    {"final_time": -1.0},
    {"cutoff": 17.0},
    {"size": 100},
    {"weight_a": 1.5},
    {"cadence": 0},
    {"seed": -3},
    {"init_modes": (InitialMode(k=2.5, amplitude=0.1),)},
])
def test_invalid_configurations(changes):
    params = {"half_length": math.pi, "size": 32}
    params.update(changes)
    with pytest.raises(ValueError):
        SimConfig(**params)


def test_random_init_needs_modes():
    with pytest.raises(ValueError):
        RandomInit(max_mode=0)


def test_digest_is_stable_and_sensitive(small_config):
    again = SimConfig(**{**small_config.__dict__})
    assert small_config.digest() == again.digest()
    assert small_config.digest() != small_config.with_changes(seed=8).digest()
    assert len(small_config.digest()) == 64


def test_to_dict_resolves_derived_values(small_config):
    data = small_config.to_dict()
    assert data["weight_kind"] == WeightKind.POWER_LOG.value
    assert data["cutoff"] == pytest.approx(small_config.n)
    assert data["dt"] == pytest.approx(small_config.time_step)
    assert data["alpha_max"] == pytest.approx(math.pi)


def test_initial_data_is_seeded(small_config):
    first = small_config.initial_data().samples
    second = small_config.initial_data().samples
    assert (first == second).all()
    assert not (small_config.with_changes(seed=99).initial_data().samples == first).all()


def test_file_initial_data(tmp_path):
    grid_size = 16
    path = tmp_path / "f0.txt"
    path.write_text("\n".join(["0.5"] * grid_size))
    cfg = SimConfig(half_length=math.pi, size=grid_size, init_file=str(path))
    assert cfg.initial_data().mean() == pytest.approx(0.5)

    path.write_text("\n".join(["0.5"] * (grid_size - 1)))
    with pytest.raises(ValueError):
        cfg.initial_data()
