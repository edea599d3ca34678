import math

import numpy as np

from common.schemas import Vector


def householder_vector(x: Vector) -> Vector | None:
    norm = np.linalg.norm(x)
    if norm == 0.0:
        return None
    v = x.copy()
    v[0] += math.copysign(norm, x[0])
    return v / np.linalg.norm(v)
