import math

import numpy as np
import pytest
from pydantic import ValidationError
from pytest_lazy_fixtures import lf

from common.exceptions import CoincidentParticlesError, DomainError
from potentials.radial import (
    grad_W,
    hess_W,
    interaction_energy,
    potential_value,
    radial_derivatives,
)
from potentials.schemas import PotentialFamily, PotentialSpec

ALL_POTENTIALS = [
    lf('morse'),
    lf('quasi_morse'),
    lf('generalized_morse'),
    lf('log_newtonian'),
]


def rotation(phi):
    return np.array([[math.cos(phi), -math.sin(phi)], [math.sin(phi), math.cos(phi)]])


def test_morse_equilibrium_distance(morse):
    r_star = 3 * math.log(40 / 27)
    assert r_star == pytest.approx(1.17913, abs=1e-5)
    first, second = radial_derivatives(morse, r_star)
    assert abs(first) < 1e-12
    assert second > 0


def test_morse_closed_form(morse):
    r = 0.8
    expected = -math.exp(-r) + 10 / 9 * math.exp(-r / 0.75)
    assert potential_value(morse, r) == pytest.approx(expected, rel=1e-14)


def test_log_newtonian_closed_form(log_newtonian):
    assert potential_value(log_newtonian, 1.0) == pytest.approx(0.25)
    first, second = radial_derivatives(log_newtonian, 2.0)
    assert first == pytest.approx(0.25 * 3.5)
    assert second == pytest.approx(0.25 * 2.25)


@pytest.mark.parametrize('spec', ALL_POTENTIALS)
@pytest.mark.parametrize('r', [0.3, 1.0, 2.7])
def test_derivatives_match_finite_differences(spec, r):
    h = 1e-5
    first, second = radial_derivatives(spec, r)
    fd_first = (potential_value(spec, r + h) - potential_value(spec, r - h)) / (2 * h)
    fd_second = (
        radial_derivatives(spec, r + h)[0] - radial_derivatives(spec, r - h)[0]
    ) / (2 * h)
    assert first == pytest.approx(fd_first, rel=1e-6, abs=1e-9)
    assert second == pytest.approx(fd_second, rel=1e-6, abs=1e-9)


@pytest.mark.parametrize('spec', ALL_POTENTIALS)
def test_linear_in_D(spec):
    r = np.array([0.4, 1.3, 3.1])
    scaled = spec.scaled(spec.D * 7.5)
    np.testing.assert_allclose(
        potential_value(scaled, r), 7.5 * potential_value(spec, r), rtol=1e-14
    )
    np.testing.assert_allclose(
        radial_derivatives(scaled, r)[1],
        7.5 * radial_derivatives(spec, r)[1],
        rtol=1e-14,
    )


@pytest.mark.parametrize('spec', ALL_POTENTIALS)
def test_gradient_and_hessian_are_rotation_equivariant(spec):
    x = np.array([0.6, -1.1])
    R = rotation(0.77)
    np.testing.assert_allclose(
        grad_W(spec, R @ x), R @ grad_W(spec, x), atol=1e-13
    )
    np.testing.assert_allclose(
        hess_W(spec, R @ x), R @ hess_W(spec, x) @ R.T, atol=1e-13
    )


@pytest.mark.parametrize('spec', ALL_POTENTIALS)
def test_hessian_matches_gradient_differences(spec):
    x = np.array([0.9, 0.4])
    h = 1e-6
    columns = [
        (grad_W(spec, x + h * e) - grad_W(spec, x - h * e)) / (2 * h)
        for e in np.eye(2)
    ]
    np.testing.assert_allclose(
        hess_W(spec, x), np.column_stack(columns), rtol=1e-6, atol=1e-8
    )


def test_hessian_is_exactly_symmetric(quasi_morse):
    H = hess_W(quasi_morse, np.array([[0.3, 1.9], [-2.2, 0.5]]))
    assert H.shape == (2, 2, 2)
    np.testing.assert_array_equal(H, np.swapaxes(H, -1, -2))


@pytest.mark.parametrize('r', [0.0, -0.5])
def test_non_positive_radius(morse, r):
    with pytest.raises(DomainError):
        potential_value(morse, r)


def test_coincident_particles(morse):
    with pytest.raises(CoincidentParticlesError):
        grad_W(morse, np.zeros(2))


def test_interaction_energy_sums_pairs(generalized_morse):
    x = np.array([0.0, 0.0, 1.0, 0.0, 0.0, 2.0])
    expected = (
        potential_value(generalized_morse, 1.0)
        + potential_value(generalized_morse, 2.0)
        + potential_value(generalized_morse, math.sqrt(5.0))
    )
    assert interaction_energy(generalized_morse, x) == pytest.approx(expected)
    assert interaction_energy(generalized_morse, np.array([1.0, 2.0])) == 0.0


@pytest.mark.parametrize(
    'kwargs',
    [
        {'family': PotentialFamily.MORSE, 'C': 1.0},
        {'family': PotentialFamily.MORSE, 'C': -1.0, 'ell': 0.5},
        {'family': PotentialFamily.QUASI_MORSE, 'C': 1.0, 'ell': 0.5},
        {'family': PotentialFamily.GENERALIZED_MORSE, 'C': 1.0, 'ell': 0.5, 'p': 0},
        {'family': PotentialFamily.LOG_NEWTONIAN, 'D': 0.0},
    ],
)
def test_invalid_parameters(kwargs):
    with pytest.raises(ValidationError):
        PotentialSpec(**kwargs)
