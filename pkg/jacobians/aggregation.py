import logging

import numpy as np

from common.schemas import Matrix, Vector
from jacobians.schemas import StationaryConfig
from linalg.jacobi import symmetric_eigen
from linalg.schemas import Spectrum
from potentials.radial import hess_W

logger = logging.getLogger(__name__)

ROTATION = np.array([[0.0, -1.0], [1.0, 0.0]])


def assemble_G(config: StationaryConfig) -> Matrix:
    """Jacobian of the aggregation field: Hess W(x_i - x_j) off the diagonal,
    minus the row sum of those blocks on it."""
    points = config.x.reshape(-1, 2)
    N = len(points)
    blocks = np.zeros((N, N, 2, 2))
    i, j = np.triu_indices(N, k=1)
    if len(i):
        hessians = hess_W(config.spec, points[i] - points[j])
        blocks[i, j] = hessians
        blocks[j, i] = hessians
        np.add.at(blocks, (i, i), -hessians)
        np.add.at(blocks, (j, j), -hessians)
    return blocks.transpose(0, 2, 1, 3).reshape(2 * N, 2 * N)


def kernel_vectors_w(x: Vector) -> tuple[Vector, Vector, Vector]:
    points = np.asarray(x, dtype=np.float64).reshape(-1, 2)
    N = len(points)
    w1 = np.tile([1.0, 0.0], N)
    w2 = np.tile([0.0, 1.0], N)
    w3 = (points @ ROTATION.T).ravel()
    return w1, w2, w3


def normalization_factor(spectrum: Spectrum) -> float:
    lowest = float(spectrum.real.min())
    if lowest >= 0:
        raise ValueError('spectrum has no negative eigenvalue to normalize')
    return -1.0 / lowest


def normalized(
    config: StationaryConfig, spectrum: Spectrum | None = None
) -> tuple[StationaryConfig, Spectrum]:
    if spectrum is None:
        spectrum = symmetric_eigen(assemble_G(config))
    factor = normalization_factor(spectrum)
    D = config.spec.D * factor
    logger.info('Normalizing %s: D %.6g -> %.6g', config.spec.family, config.spec.D, D)
    return config.scaled(D), spectrum.scaled(factor)
