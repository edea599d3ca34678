import math

import numpy as np
import pytest

from dynamics.schemas import ModelParams
from experiments.steady import find_stationary_state
from jacobians.schemas import StationaryConfig
from potentials.schemas import PotentialFamily, reference_potentials


@pytest.fixture(scope='session')
def model_params():
    return ModelParams(alpha=1.0, beta=5.0)


@pytest.fixture(scope='session')
def morse_spec():
    return reference_potentials()[PotentialFamily.MORSE]


@pytest.fixture(scope='session')
def morse_pair(morse_spec):
    """Two Morse particles at the equilibrium distance r* = 3 ln(40/27)."""
    r_star = 3 * math.log(40 / 27)
    x = np.array([0.0, 0.0, r_star * math.cos(1.1), r_star * math.sin(1.1)])
    return StationaryConfig.from_positions(morse_spec, x)


@pytest.fixture(scope='session')
def morse_state_10(morse_spec):
    return find_stationary_state(
        morse_spec, 10, refine_D=1.0, refine_T=300.0, dt=0.05, seed=3, tol=1e-8
    )


@pytest.fixture(scope='session')
def morse_state_25(morse_spec):
    return find_stationary_state(
        morse_spec, 25, refine_D=1.0, refine_T=300.0, dt=0.02, seed=5, tol=1e-8
    )
