import math

import pytest

from muskat.lab import FixedEnsemble, RandomEnsemble, build_ratio_report
from muskat.spectral import GridFunction, make_grid


def test_nonpositive_and_nonfinite_right_sides_are_excluded():
    pairs = [(1.0, 2.0), (3.0, 0.0), (1.0, math.inf), (0.5, -1.0), (2.0, 1.0), (1.0, math.nan)]
    report = build_ratio_report("toy", pairs, {"law": "fixed"})
    assert report.count == 2
    assert report.excluded == 4
    assert report.max_ratio == 2.0
    assert report.min_ratio == 0.5
    assert report.mean_ratio == pytest.approx(1.25)
    data = report.to_dict()
    assert data["identifier"] == "toy"
    assert data["samples"] == [[1.0, 2.0, 0.5], [2.0, 1.0, 2.0]]


def test_empty_report_statistics():
    report = build_ratio_report("empty", [], {})
    assert report.count == 0
    assert report.max_ratio == 0.0
    assert report.mean_ratio == 0.0


def test_random_ensemble_is_seeded():
    grid = make_grid(math.pi, 32)
    ensemble = RandomEnsemble(grid, size=4, seed=3)
    first = [f.samples.tolist() for f in ensemble.fields()]
    second = [f.samples.tolist() for f in RandomEnsemble(grid, size=4, seed=3).fields()]
    assert first == second
    assert len(ensemble.pairs()) == 4
    assert ensemble.describe()["max_mode"] == 4
    assert ensemble.pairs()[0][0].samples.tolist() != first[0]


def test_random_ensemble_needs_members():
    with pytest.raises(ValueError):
        RandomEnsemble(make_grid(math.pi, 32), size=0)


def test_fixed_ensemble_pairs_consecutive_members():
    grid = make_grid(math.pi, 16)
    members = tuple(GridFunction.constant(grid, float(v)) for v in range(5))
    ensemble = FixedEnsemble(grid, members, label="constants")
    pairs = ensemble.pairs()
    assert len(pairs) == 2
    assert pairs[1][0].mean() == pytest.approx(2.0)
    assert ensemble.describe() == {"law": "constants", "grid": {"L": grid.half_length, "N": 16}, "size": 5}
