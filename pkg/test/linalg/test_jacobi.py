import numpy as np
import pytest

from common.exceptions import ConvergenceError, SymmetryError
from linalg.jacobi import symmetric_eigen


def test_identity():
    spectrum = symmetric_eigen(np.eye(3))
    np.testing.assert_array_equal(spectrum.eigenvalues, [1, 1, 1])


def test_two_by_two_closed_form():
    spectrum = symmetric_eigen(np.array([[2.0, 1.0], [1.0, 2.0]]))
    np.testing.assert_allclose(spectrum.real, [3.0, 1.0], atol=1e-14)
    first, second = spectrum.eigenvectors.T
    assert abs(first @ np.array([1.0, 1.0]) / np.sqrt(2)) == pytest.approx(1.0)
    assert abs(second @ np.array([1.0, -1.0]) / np.sqrt(2)) == pytest.approx(1.0)


def test_random_matrix_residual_and_reconstruction(random_symmetric):
    a = random_symmetric(50)
    spectrum = symmetric_eigen(a)
    v, lam = spectrum.eigenvectors, spectrum.real
    norm = np.linalg.norm(a)
    assert np.linalg.norm(a @ v - v * lam) <= 1e-10 * norm
    assert np.linalg.norm(v * lam @ v.T - a) < 1e-10 * norm
    np.testing.assert_allclose(v.T @ v, np.eye(50), atol=1e-12)
    np.testing.assert_array_equal(spectrum.eigenvalues.imag, 0.0)


def test_trace_is_preserved(random_symmetric):
    a = random_symmetric(20)
    spectrum = symmetric_eigen(a)
    assert abs(spectrum.real.sum() - np.trace(a)) < 1e-8 * np.linalg.norm(a)


def test_diagonal_input_is_exact():
    d = np.array([0.5, -3.0, 2.0, 1e-9])
    spectrum = symmetric_eigen(np.diag(d))
    np.testing.assert_array_equal(spectrum.real, np.sort(d)[::-1])


def test_asymmetric_input():
    with pytest.raises(SymmetryError):
        symmetric_eigen(np.array([[1.0, 2.0], [2.0 + 1e-6, 1.0]]))


def test_non_square_input():
    with pytest.raises(ValueError):
        symmetric_eigen(np.ones((2, 3)))


def test_sweep_budget_exhausted(random_symmetric):
    with pytest.raises(ConvergenceError):
        symmetric_eigen(random_symmetric(6), max_sweeps=0)
