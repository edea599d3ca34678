"""Eigenvalues of general real matrices.

Householder reduction to upper Hessenberg form followed by the implicit
double-shift QR iteration of Francis, deflating one or two eigenvalues at a
time from the bottom of the active block. Only eigenvalues are computed, so
reflectors are applied within the active block alone.
"""

import logging
import math

import numpy as np

from common.exceptions import ConvergenceError
from common.schemas import Matrix
from linalg.config import linalg_config
from linalg.householder import householder_vector
from linalg.schemas import ComplexVector, Spectrum

logger = logging.getLogger(__name__)

EPS = np.finfo(np.float64).eps
EXCEPTIONAL_SHIFT_PERIOD = 10


def hessenberg(A: Matrix) -> tuple[Matrix, Matrix]:
    h = np.array(A, dtype=np.float64)
    n = h.shape[0]
    q = np.eye(n)
    for k in range(n - 2):
        v = householder_vector(h[k + 1 :, k])
        if v is None:
            continue
        h[k + 1 :, k:] -= 2.0 * np.outer(v, v @ h[k + 1 :, k:])
        h[:, k + 1 :] -= 2.0 * np.outer(h[:, k + 1 :] @ v, v)
        q[:, k + 1 :] -= 2.0 * np.outer(q[:, k + 1 :] @ v, v)
        h[k + 2 :, k] = 0.0
    return h, q


def _active_block_start(a: Matrix, nn: int, anorm: float) -> int:
    for low in range(nn, 0, -1):
        s = abs(a[low - 1, low - 1]) + abs(a[low, low]) or anorm
        if abs(a[low, low - 1]) <= EPS * s:
            a[low, low - 1] = 0.0
            return low
    return 0


def _bulge_start(a: Matrix, low: int, nn: int, x: float, y: float, w: float):
    # Look for two consecutive small subdiagonal elements from the bottom.
    m = nn - 2
    while True:
        z = a[m, m]
        r = x - z
        s = y - z
        p = (r * s - w) / a[m + 1, m] + a[m, m + 1]
        q = a[m + 1, m + 1] - z - r - s
        r = a[m + 2, m + 1]
        s = abs(p) + abs(q) + abs(r)
        p, q, r = p / s, q / s, r / s
        if m == low:
            break
        u = abs(a[m, m - 1]) * (abs(q) + abs(r))
        v = abs(p) * (abs(a[m - 1, m - 1]) + abs(z) + abs(a[m + 1, m + 1]))
        if u <= EPS * v:
            break
        m -= 1
    return m, p, q, r


def _francis_sweep(
    a: Matrix, low: int, nn: int, x: float, y: float, w: float
) -> None:
    m, p, q, r = _bulge_start(a, low, nn, x, y, w)
    for i in range(m, nn - 1):
        a[i + 2, i] = 0.0
        if i != m:
            a[i + 2, i - 1] = 0.0

    for k in range(m, nn):
        last = k + 1 == nn
        if k != m:
            p = a[k, k - 1]
            q = a[k + 1, k - 1]
            r = 0.0 if last else a[k + 2, k - 1]
            x = abs(p) + abs(q) + abs(r)
            if x != 0.0:
                p, q, r = p / x, q / x, r / x
        s = math.copysign(math.sqrt(p * p + q * q + r * r), p)
        if s == 0.0:
            continue
        if k == m:
            if low != m:
                a[k, k - 1] = -a[k, k - 1]
        else:
            a[k, k - 1] = -s * x
        p += s
        x, y, z = p / s, q / s, r / s
        q, r = q / p, r / p

        cols = slice(k, nn + 1)
        row = a[k, cols] + q * a[k + 1, cols]
        if not last:
            row += r * a[k + 2, cols]
            a[k + 2, cols] -= row * z
        a[k + 1, cols] -= row * y
        a[k, cols] -= row * x

        rows = slice(low, min(nn, k + 3) + 1)
        column = x * a[rows, k] + y * a[rows, k + 1]
        if not last:
            column += z * a[rows, k + 2]
            a[rows, k + 2] -= column * r
        a[rows, k + 1] -= column * q
        a[rows, k] -= column


def _hessenberg_eigenvalues(a: Matrix, budget: int) -> ComplexVector:
    n = a.shape[0]
    eigenvalues = np.zeros(n, dtype=np.complex128)
    anorm = float(np.abs(np.triu(a, -1)).sum())
    nn = n - 1
    shift = 0.0
    spent = 0
    while nn >= 0:
        its = 0
        while True:
            low = _active_block_start(a, nn, anorm)
            x = a[nn, nn]
            if low == nn:
                eigenvalues[nn] = x + shift
                nn -= 1
                break
            y = a[nn - 1, nn - 1]
            w = a[nn, nn - 1] * a[nn - 1, nn]
            if low == nn - 1:
                p = 0.5 * (y - x)
                q = p * p + w
                z = math.sqrt(abs(q))
                x += shift
                if q >= 0.0:
                    z = p + math.copysign(z, p)
                    eigenvalues[nn - 1] = eigenvalues[nn] = x + z
                    if z != 0.0:
                        # smaller root from the product of the pair
                        eigenvalues[nn] = x - w / z
                else:
                    eigenvalues[nn] = complex(x + p, -z)
                    eigenvalues[nn - 1] = complex(x + p, z)
                nn -= 2
                break

            if spent >= budget:
                raise ConvergenceError(
                    f'Francis QR did not converge within {budget} iterations'
                )
            if its and its % EXCEPTIONAL_SHIFT_PERIOD == 0:
                logger.debug('Exceptional shift at row %d after %d iterations', nn, its)
                shift += x
                a[np.arange(nn + 1), np.arange(nn + 1)] -= x
                s = abs(a[nn, nn - 1]) + abs(a[nn - 1, nn - 2])
                x = y = 0.75 * s
                w = -0.4375 * s * s
            its += 1
            spent += 1
            _francis_sweep(a, low, nn, x, y, w)
    return eigenvalues


def general_eigenvalues(A: Matrix, kernel_tol: float | None = None) -> Spectrum:
    a = np.array(A, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f'expected a square matrix, got shape {a.shape}')
    kernel_tol = linalg_config.KERNEL_TOL if kernel_tol is None else kernel_tol

    n = a.shape[0]
    h, _ = hessenberg(a)
    budget = linalg_config.QR_ITERATIONS_PER_EIGENVALUE * max(n, 1)
    eigenvalues = _hessenberg_eigenvalues(h, budget)
    logger.debug('Francis QR: %d eigenvalues', n)
    return Spectrum.from_eigenvalues(eigenvalues, kernel_tol)
