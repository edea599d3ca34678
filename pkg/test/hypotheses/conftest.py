import math

import numpy as np
import pytest

from jacobians.schemas import StationaryConfig


@pytest.fixture(scope='session')
def horizontal_pair(morse_spec):
    r_star = 3 * math.log(40 / 27)
    return StationaryConfig.from_positions(morse_spec, np.array([0.0, 0.0, r_star, 0.0]))


@pytest.fixture
def scattered():
    rng = np.random.default_rng(23)

    def make(N):
        radius = 2.0 * np.sqrt(rng.random(N))
        angle = 2 * np.pi * rng.random(N)
        return np.column_stack([radius * np.cos(angle), radius * np.sin(angle)]).ravel()

    return make
