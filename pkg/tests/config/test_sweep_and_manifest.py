import math
from pathlib import Path

import pytest

from muskat.config import RunManifest, SweepSpec
from muskat.config.run_manifest import WORKERS_ENV
from muskat.solver import InitialMode, RandomInit, SimConfig


@pytest.fixture
def spec():
    return SweepSpec((0.01, 0.02), (4.0, 8.0), (0.05, 0.1))


def test_cells_nest_amplitude_cutoff_dt(spec):
    cells = list(spec.cells())
    assert len(cells) == len(spec) == 8
    assert [c.index for c in cells] == list(range(8))
    assert (cells[0].amplitude, cells[0].cutoff, cells[0].dt) == (0.01, 4.0, 0.05)
    assert (cells[1].amplitude, cells[1].cutoff, cells[1].dt) == (0.01, 4.0, 0.1)
    assert (cells[2].amplitude, cells[2].cutoff, cells[2].dt) == (0.01, 8.0, 0.05)
    assert cells[4].amplitude == 0.02
    assert cells[5].label == "cell005"


@pytest.mark.parametrize("axes", [
    ((), (4.0,), (0.1,)),
    ((-0.1,), (4.0,), (0.1,)),
    ((0.1,), (0.0,), (0.1,)),
    ((0.1,), (4.0,), (-0.1,)),
])
def test_invalid_axes(axes):
    with pytest.raises(ValueError):
        SweepSpec(*axes)


def test_cell_config_rescales_modes(spec):
    base = SimConfig(half_length=math.pi, size=32,
                     init_modes=(InitialMode(1, 0.5), InitialMode(2, 0.25, 0.3)))
    cell = list(spec.cells())[3]
    cfg = spec.cell_config(base, cell)
    assert cfg.n == 8.0
    assert cfg.time_step == pytest.approx(0.1)
    assert [m.amplitude for m in cfg.init_modes] == pytest.approx([0.01, 0.005])
    assert cfg.init_modes[1].phase == 0.3


def test_cell_config_without_modes_uses_random_data(spec):
    cell = next(spec.cells())
    plain = spec.cell_config(SimConfig(half_length=math.pi, size=32), cell)
    assert plain.init_random == RandomInit(amplitude=0.01)
    seeded = SimConfig(half_length=math.pi, size=32, init_random=RandomInit(0.5, decay=2.0, max_mode=3))
    assert spec.cell_config(seeded, cell).init_random == RandomInit(0.01, 2.0, 3)


def test_manifest_validation(tmp_path):
    manifest = RunManifest("verify", str(tmp_path))
    assert manifest.out_dir == Path(tmp_path)
    with pytest.raises(ValueError):
        RunManifest("plot", tmp_path)
    with pytest.raises(ValueError):
        RunManifest("simulate", tmp_path)
    with pytest.raises(ValueError):
        RunManifest("weights", tmp_path, seed=-1)
    with pytest.raises(ValueError):
        RunManifest("weights", tmp_path, workers=0)


def test_prepare_output_creates_the_directory(tmp_path):
    out = tmp_path / "a" / "b"
    assert RunManifest("weights", out).prepare_output() == out
    assert out.is_dir()


def test_worker_count(tmp_path, monkeypatch):
    monkeypatch.delenv(WORKERS_ENV, raising=False)
    assert RunManifest("sweep", tmp_path, config_path="c.yaml", workers=3).worker_count() == 3
    assert RunManifest("sweep", tmp_path, config_path="c.yaml").worker_count() >= 1
    monkeypatch.setenv(WORKERS_ENV, "2")
    assert RunManifest("sweep", tmp_path, config_path="c.yaml").worker_count() == 2
    monkeypatch.setenv(WORKERS_ENV, "many")
    with pytest.raises(ValueError):
        RunManifest("sweep", tmp_path, config_path="c.yaml").worker_count()
