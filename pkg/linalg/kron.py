import numpy as np

from common.schemas import Matrix


def kron(A: Matrix, B: Matrix) -> Matrix:
    left = np.asarray(A, dtype=np.float64)
    right = np.asarray(B, dtype=np.float64)
    if left.ndim == 1:
        left = left[:, None]
    if right.ndim == 1:
        right = right[:, None]
    return np.kron(left, right)


def ones(n: int) -> Matrix:
    return np.ones((n, 1))
