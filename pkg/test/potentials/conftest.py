import pytest

from potentials.schemas import PotentialFamily, reference_potentials


@pytest.fixture(scope='session')
def morse():
    return reference_potentials()[PotentialFamily.MORSE]


@pytest.fixture(scope='session')
def quasi_morse():
    return reference_potentials()[PotentialFamily.QUASI_MORSE]


@pytest.fixture(scope='session')
def generalized_morse():
    return reference_potentials()[PotentialFamily.GENERALIZED_MORSE]


@pytest.fixture(scope='session')
def log_newtonian():
    return reference_potentials()[PotentialFamily.LOG_NEWTONIAN]
