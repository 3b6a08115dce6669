import math

import numpy as np
import pytest

from muskat.solver import RandomInit, SimConfig
from muskat.spectral import GridFunction, make_grid
from muskat.weights import kappa_power_log, tabulate_phi


@pytest.fixture
def grid():
    return make_grid(math.pi, 64)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def random_field(grid, rng):
    def build(max_mode=12, decay=1.0, amplitude=1.0):
        return GridFunction.random_band_limited(grid, rng, max_mode, decay=decay, amplitude=amplitude)
    return build


@pytest.fixture(scope="session")
def phi_third():
    """phi for kappa_{1/3}, coarse enough to tabulate quickly."""
    return tabulate_phi(kappa_power_log(1.0 / 3.0), lambda_range=(1e-3, 1e3), density=8)


@pytest.fixture
def small_config():
    """Small-data run on a coarse grid, short enough for unit tests."""
    return SimConfig(
        half_length=math.pi,
        size=32,
        final_time=0.5,
        init_random=RandomInit(amplitude=0.01, decay=3.0, max_mode=4),
        alpha_nodes_per_decade=16,
        seed=7,
    )
