import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(11)


@pytest.fixture
def scattered(rng):
    def make(N):
        radius = 2.0 * np.sqrt(rng.random(N))
        angle = 2 * np.pi * rng.random(N)
        return np.column_stack([radius * np.cos(angle), radius * np.sin(angle)]).ravel()

    return make


@pytest.fixture(scope='session')
def central_difference():
    def jacobian(field, y, h=1e-6):
        columns = [(field(y + h * e) - field(y - h * e)) / (2 * h) for e in np.eye(len(y))]
        return np.column_stack(columns)

    return jacobian
