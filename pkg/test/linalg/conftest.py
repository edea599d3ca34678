import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(7)


@pytest.fixture
def random_symmetric(rng):
    def make(n):
        a = rng.normal(size=(n, n))
        return a + a.T

    return make


@pytest.fixture(scope='session')
def assert_same_eigenvalues():
    def check(actual, expected, tol):
        remaining = list(np.asarray(expected, dtype=complex))
        for value in np.asarray(actual, dtype=complex):
            distances = np.abs(np.array(remaining) - value)
            nearest = int(np.argmin(distances))
            assert distances[nearest] < tol, f'{value} has no partner within {tol}'
            remaining.pop(nearest)
        assert not remaining

    return check
