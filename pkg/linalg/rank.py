import logging

import numpy as np
from numpy.typing import NDArray

from common.schemas import Matrix
from linalg.householder import householder_vector

logger = logging.getLogger(__name__)


def pivoted_qr(A: Matrix) -> tuple[Matrix, Matrix, NDArray[np.intp]]:
    """Householder QR with column pivoting: A[:, perm] = Q R, |R_kk| non-increasing."""
    r = np.array(A, dtype=np.float64)
    m, n = r.shape
    q = np.eye(m)
    perm = np.arange(n)
    for k in range(min(m, n)):
        norms = np.linalg.norm(r[k:, k:], axis=0)
        j = k + int(np.argmax(norms))
        if j != k:
            r[:, [k, j]] = r[:, [j, k]]
            perm[[k, j]] = perm[[j, k]]
        v = householder_vector(r[k:, k])
        if v is None:
            break
        r[k:, k:] -= 2.0 * np.outer(v, v @ r[k:, k:])
        q[:, k:] -= 2.0 * np.outer(q[:, k:] @ v, v)
        r[k + 1 :, k] = 0.0
    return q, r, perm


def _rank_from_r(r: Matrix, threshold: float) -> int:
    diagonal = np.abs(np.diag(r))
    return int(np.count_nonzero(diagonal > threshold))


def numerical_rank(A: Matrix, tol: float) -> int:
    if tol <= 0:
        raise ValueError('rank tolerance must be positive')
    a = np.asarray(A, dtype=np.float64)
    if a.size == 0:
        return 0
    _, r, _ = pivoted_qr(a)
    return _rank_from_r(r, tol * np.linalg.norm(a))


def kernel_basis(A: Matrix, tol: float) -> Matrix:
    if tol <= 0:
        raise ValueError('rank tolerance must be positive')
    a = np.asarray(A, dtype=np.float64)
    # ker(A) is the orthogonal complement of range(A^T)
    q, r, _ = pivoted_qr(a.T)
    rank = _rank_from_r(r, tol * np.linalg.norm(a))
    logger.debug('Kernel of a %dx%d matrix: dimension %d', *a.shape, a.shape[1] - rank)
    return q[:, rank:]
