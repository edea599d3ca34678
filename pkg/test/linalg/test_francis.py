import numpy as np
import pytest

from linalg.francis import general_eigenvalues, hessenberg
from linalg.jacobi import symmetric_eigen


def characteristic_polynomial(a):
    """Faddeev-LeVerrier coefficients, highest power first."""
    n = len(a)
    coefficients = [1.0]
    m = np.zeros_like(a)
    for k in range(1, n + 1):
        m = a @ m + coefficients[-1] * np.eye(n)
        coefficients.append(-np.trace(a @ m) / k)
    return np.array(coefficients)


def test_companion_of_x_squared_plus_one():
    spectrum = general_eigenvalues(np.array([[0.0, -1.0], [1.0, 0.0]]))
    np.testing.assert_allclose(spectrum.eigenvalues, [1j, -1j], atol=1e-15)


def test_upper_triangular_gives_diagonal():
    a = np.triu(np.arange(1.0, 17.0).reshape(4, 4))
    spectrum = general_eigenvalues(a)
    np.testing.assert_allclose(spectrum.real, [16.0, 11.0, 6.0, 1.0], atol=1e-12)
    np.testing.assert_array_equal(spectrum.eigenvalues.imag, 0.0)


@pytest.mark.parametrize('seed', range(4))
def test_matches_characteristic_polynomial_roots(seed, assert_same_eigenvalues):
    a = np.random.default_rng(seed).normal(size=(6, 6))
    roots = np.roots(characteristic_polynomial(a))
    assert_same_eigenvalues(general_eigenvalues(a).eigenvalues, roots, 1e-6)


def test_larger_matrix_against_lapack(rng, assert_same_eigenvalues):
    a = rng.normal(size=(60, 60))
    expected = np.linalg.eigvals(a)
    assert_same_eigenvalues(
        general_eigenvalues(a).eigenvalues, expected, 1e-8 * np.linalg.norm(a)
    )


def test_agrees_with_jacobi_on_symmetric_input(random_symmetric):
    a = random_symmetric(30)
    francis = general_eigenvalues(a)
    jacobi = symmetric_eigen(a)
    np.testing.assert_allclose(francis.eigenvalues.imag, 0.0, atol=1e-8)
    np.testing.assert_allclose(francis.real, jacobi.real, atol=1e-8)


def test_trace_is_preserved(rng):
    a = rng.normal(size=(25, 25))
    spectrum = general_eigenvalues(a)
    assert abs(spectrum.eigenvalues.sum() - np.trace(a)) < 1e-8 * np.linalg.norm(a)


def test_order_is_descending_real_then_imaginary():
    a = np.array(
        [
            [1.0, -2.0, 0.0, 0.0],
            [2.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 3.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
        ]
    )
    spectrum = general_eigenvalues(a)
    np.testing.assert_allclose(
        spectrum.eigenvalues, [3.0, 1.0 + 2.0j, 1.0 - 2.0j, -1.0], atol=1e-14
    )


def test_hessenberg_similarity(rng):
    a = rng.normal(size=(8, 8))
    h, q = hessenberg(a)
    np.testing.assert_array_equal(np.tril(h, -2), 0.0)
    np.testing.assert_allclose(q @ q.T, np.eye(8), atol=1e-14)
    np.testing.assert_allclose(q @ h @ q.T, a, atol=1e-13)


def test_one_by_one_and_empty():
    assert general_eigenvalues(np.array([[4.5]])).eigenvalues[0] == 4.5
    assert general_eigenvalues(np.zeros((0, 0))).eigenvalues.size == 0
