import numpy as np

from common.schemas import Vector
from dynamics.schemas import ParticleState


def velocity_polarization(v: Vector) -> float:
    velocities = np.asarray(v, dtype=np.float64).reshape(-1, 2)
    speeds = np.linalg.norm(velocities, axis=1)
    if np.any(speeds == 0):
        raise ValueError('polarization is undefined for a particle at rest')
    mean_direction = (velocities / speeds[:, None]).mean(axis=0)
    return min(float(np.linalg.norm(mean_direction)), 1.0)


def polarization(s: ParticleState) -> float:
    return velocity_polarization(s.v)
