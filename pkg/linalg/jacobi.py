import logging
import math

import numpy as np

from common.exceptions import ConvergenceError, SymmetryError
from common.schemas import Matrix
from linalg.config import linalg_config
from linalg.schemas import Spectrum

logger = logging.getLogger(__name__)


def _rotate(M: Matrix, p: int, q: int, c: float, s: float) -> None:
    column_p = M[:, p].copy()
    M[:, p] = c * column_p - s * M[:, q]
    M[:, q] = s * column_p + c * M[:, q]


def symmetric_eigen(
    A: Matrix,
    kernel_tol: float | None = None,
    max_sweeps: int | None = None,
) -> Spectrum:
    """Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    JACOBI_TOL * ||A||_F. Eigenvectors are the orthonormal columns of the
    returned spectrum, ordered like the eigenvalues.
    """
    a = np.array(A, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f'expected a square matrix, got shape {a.shape}')
    kernel_tol = linalg_config.KERNEL_TOL if kernel_tol is None else kernel_tol
    max_sweeps = linalg_config.JACOBI_MAX_SWEEPS if max_sweeps is None else max_sweeps

    n = a.shape[0]
    norm = np.linalg.norm(a)
    asymmetry = np.abs(a - a.T).max(initial=0.0)
    if asymmetry > linalg_config.SYMMETRY_TOL * max(norm, 1.0):
        raise SymmetryError(
            f'matrix is not symmetric (max |A - A^T| = {asymmetry:.3e})'
        )
    a = 0.5 * (a + a.T)
    v = np.eye(n)

    threshold = linalg_config.JACOBI_TOL * norm
    for sweep in range(max_sweeps + 1):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= threshold:
            logger.debug('Jacobi converged after %d sweeps (n = %d)', sweep, n)
            break
        if sweep == max_sweeps:
            raise ConvergenceError(
                f'Jacobi did not converge in {max_sweeps} sweeps (off-norm {off:.3e})'
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                _rotate(a, p, q, c, s)
                _rotate(a.T, p, q, c, s)
                a[p, q] = a[q, p] = 0.0
                _rotate(v, p, q, c, s)

    return Spectrum.from_eigenvalues(np.diag(a).copy(), kernel_tol, eigenvectors=v)
