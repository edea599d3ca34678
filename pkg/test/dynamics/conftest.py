import math

import numpy as np
import pytest

from dynamics.schemas import ModelParams
from potentials.schemas import PotentialFamily, reference_potentials


@pytest.fixture(scope='session')
def morse():
    return reference_potentials()[PotentialFamily.MORSE]


@pytest.fixture(scope='session')
def params():
    return ModelParams(alpha=1.0, beta=5.0)


@pytest.fixture(scope='session')
def r_star():
    return 3 * math.log(40 / 27)


@pytest.fixture
def pair_at_rest(r_star):
    """Two Morse particles at the equilibrium distance, a stationary state."""
    return np.array([0.2, -0.1, 0.2 + r_star * math.cos(1.1), -0.1 + r_star * math.sin(1.1)])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def scattered(rng):
    def make(N):
        radius = 2.0 * np.sqrt(rng.random(N))
        angle = 2 * np.pi * rng.random(N)
        return np.column_stack([radius * np.cos(angle), radius * np.sin(angle)]).ravel()

    return make
