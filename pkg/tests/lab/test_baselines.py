import json

import pytest

from muskat.lab import BaselineStore, build_ratio_report
from muskat.lab.baselines import BASELINES_ENV


def _report(identifier, ratio):
    return build_ratio_report(identifier, [(ratio, 1.0)], {})


def test_first_comparison_records(tmp_path):
    store = BaselineStore(tmp_path / "baselines.json")
    (result,) = store.compare(_report("V_bound", 0.8))
    assert result.recorded and result.passed
    assert result.stored is None
    assert store.entries == {"V_bound": {"max_ratio": 0.8}}


def test_drift_within_tolerance_passes(tmp_path):
    store = BaselineStore(tmp_path / "baselines.json")
    store.compare(_report("V_bound", 1.0))
    (result,) = store.compare(_report("V_bound", 1.05))
    assert not result.recorded
    assert result.drift == pytest.approx(0.05 / 1.05)
    assert result.passed


def test_drift_beyond_tolerance_fails(tmp_path):
    store = BaselineStore(tmp_path / "baselines.json")
    store.compare(_report("R_bound", 1.0))
    (result,) = store.compare(_report("R_bound", 1.5))
    assert not result.passed
    assert result.to_dict()["stored"] == 1.0
    # the stored value is kept, not overwritten
    assert store.entries["R_bound"]["max_ratio"] == 1.0


def test_several_statistics(tmp_path):
    store = BaselineStore(tmp_path / "baselines.json", drift=0.2)
    report = build_ratio_report("Tf_bound", [(1.0, 2.0), (3.0, 2.0)], {})
    results = store.compare(report, statistics=("max_ratio", "mean_ratio"))
    assert [r.statistic for r in results] == ["max_ratio", "mean_ratio"]
    assert store.entries["Tf_bound"] == {"max_ratio": 1.5, "mean_ratio": 1.0}


def test_save_and_reload(tmp_path):
    path = tmp_path / "nested" / "baselines.json"
    store = BaselineStore(path)
    store.compare_values("hardy", {"max_ratio": 0.5})
    store.save()
    assert json.loads(path.read_text(encoding="utf-8")) == {"hardy": {"max_ratio": 0.5}}
    reloaded = BaselineStore(path)
    (result,) = reloaded.compare_values("hardy", {"max_ratio": 0.5})
    assert not result.recorded
    assert result.drift == 0.0


def test_path_from_environment(tmp_path, monkeypatch):
    custom = tmp_path / "custom.json"
    monkeypatch.setenv(BASELINES_ENV, str(custom))
    assert BaselineStore.from_env(tmp_path / "default.json").path == custom
    monkeypatch.delenv(BASELINES_ENV)
    assert BaselineStore.from_env(tmp_path / "default.json").path == tmp_path / "default.json"


def test_drop_of_the_lower_ratio_fails(tmp_path):
    store = BaselineStore(tmp_path / "baselines.json")
    stats = ("min_ratio", "max_ratio")
    store.compare(build_ratio_report("norm_equivalence", [(1.0, 1.0), (2.0, 1.0)], {}), stats)
    results = store.compare(build_ratio_report("norm_equivalence", [(0.1, 1.0), (2.0, 1.0)], {}), stats)
    assert [(r.statistic, r.passed) for r in results] == [("min_ratio", False), ("max_ratio", True)]
    assert results[0].drift == pytest.approx(0.9)
