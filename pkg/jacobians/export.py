import logging
from pathlib import Path

import numpy as np

from common.exceptions import CorruptInputError
from common.schemas import Matrix

logger = logging.getLogger(__name__)


def write_dense_matrix(path: str | Path, A: Matrix) -> Path:
    """Plain text: a 'rows cols' header line, then one matrix row per line."""
    wrapped_path = Path(path)
    wrapped_path.parent.mkdir(parents=True, exist_ok=True)
    matrix = np.atleast_2d(np.asarray(A, dtype=np.float64))
    rows, cols = matrix.shape
    np.savetxt(wrapped_path, matrix, fmt='%.17g', header=f'{rows} {cols}', comments='')
    logger.debug('Wrote %dx%d matrix to %s', rows, cols, wrapped_path)
    return wrapped_path


def read_dense_matrix(path: str | Path) -> Matrix:
    wrapped_path = Path(path)
    try:
        with wrapped_path.open() as file:
            rows, cols = (int(token) for token in file.readline().split())
            values = np.loadtxt(file, dtype=np.float64, ndmin=2)
    except (ValueError, OSError) as e:
        raise CorruptInputError(
            f'cannot read dense matrix from {wrapped_path}: {e}'
        ) from e

    if rows * cols == 0:
        return np.zeros((rows, cols))
    if values.shape != (rows, cols):
        raise CorruptInputError(
            f'{wrapped_path}: header says {rows}x{cols}, found {values.shape}'
        )
    if not np.all(np.isfinite(values)):
        raise CorruptInputError(f'{wrapped_path}: matrix entries must be finite')
    return values
