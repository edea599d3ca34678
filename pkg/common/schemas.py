from enum import IntEnum, StrEnum, auto

import numpy as np
from numpy.typing import NDArray

type Vector = NDArray[np.float64]
type Matrix = NDArray[np.float64]


class ExitCode(IntEnum):
    SUCCESS = 0
    CONFIG_ERROR = 2
    NON_CONVERGENCE = 3
    HYPOTHESIS_FAILURE = 4
    INPUT_ERROR = 5


class FailureReason(StrEnum):
    SUCCESS = auto()
    NOT_STATIONARY = auto()
    KERNEL_DIMENSION = auto()
    KERNEL_SPAN = auto()
    NONNEGATIVE_SPECTRUM = auto()
    COLLINEAR = auto()
    ORTHOGONAL_EIGENVECTOR = auto()
    GENERALIZED_EIGENVECTOR = auto()
    LEMMA4_KERNEL = auto()
    LEMMA4_SPECTRUM = auto()
    MISSING_EIGENVALUE = auto()


FAILURE_INTERPRETATIONS = {
    FailureReason.SUCCESS: 'ok',
    FailureReason.NOT_STATIONARY: 'stationarity residual above tolerance',
    FailureReason.KERNEL_DIMENSION: 'zero eigenspace of G is not three dimensional',
    FailureReason.KERNEL_SPAN: 'translations and rotation do not span the kernel',
    FailureReason.NONNEGATIVE_SPECTRUM: 'a non-kernel eigenvalue of G is not negative',
    FailureReason.COLLINEAR: 'all particles lie on a straight line',
    FailureReason.ORTHOGONAL_EIGENVECTOR: (
        'an eigenvector is particle-wise orthogonal to m0'
    ),
    FailureReason.GENERALIZED_EIGENVECTOR: 'a generalized eigenvector for zero exists',
    FailureReason.LEMMA4_KERNEL: (
        'zero eigenspace of the reduced Jacobian is not z1..z4'
    ),
    FailureReason.LEMMA4_SPECTRUM: 'a non-zero eigenvalue has non-negative real part',
    FailureReason.MISSING_EIGENVALUE: '-2 alpha is not in the spectrum',
}
