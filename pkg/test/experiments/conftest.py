import pytest

from jacobians.meanvel import flock_member


@pytest.fixture(scope='session')
def pair_member(morse_pair, model_params):
    return flock_member(morse_pair, model_params, 0.3)
