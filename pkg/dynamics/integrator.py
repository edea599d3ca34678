import logging
import math
from collections.abc import Callable

import numpy as np

from common.exceptions import DivergenceError
from common.schemas import Vector
from dynamics.rhs import VectorField

logger = logging.getLogger(__name__)

type Observer = Callable[[int, float, Vector], None]


def _stage(rhs: VectorField, y: Vector) -> Vector:
    # the field is never evaluated on a non-finite argument
    if not np.all(np.isfinite(y)):
        raise FloatingPointError('non-finite RK4 stage')
    return rhs(y)


def rk4_step(rhs: VectorField, y: Vector, h: float) -> Vector:
    k1 = _stage(rhs, y)
    k2 = _stage(rhs, y + 0.5 * h * k1)
    k3 = _stage(rhs, y + 0.5 * h * k2)
    k4 = _stage(rhs, y + h * k3)
    return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def rk4_integrate(
    rhs: VectorField,
    y0: Vector,
    dt: float,
    T: float,
    observer: Observer | None = None,
) -> Vector:
    """Classical fixed-step RK4 on [0, T].

    The observer receives (step, t, y) for the initial state and after every
    step. A last step shorter than dt is taken when T is not a multiple of dt.
    Raises DivergenceError as soon as the state stops being finite.
    """
    if not dt > 0:
        raise ValueError(f'time step must be positive, got {dt}')
    if not T >= 0:
        raise ValueError(f'horizon must be non-negative, got {T}')

    y = np.array(y0, dtype=np.float64)
    n_steps = math.ceil(T / dt - 1e-9)
    logger.debug('RK4: %d steps of %g on a %d-dimensional state', n_steps, dt, y.size)

    last_h = T - (n_steps - 1) * dt
    if math.isclose(last_h, dt, rel_tol=1e-9):
        last_h = dt

    if observer is not None:
        observer(0, 0.0, y)
    t = 0.0
    for step in range(1, n_steps + 1):
        t = T if step == n_steps else step * dt
        try:
            y = rk4_step(rhs, y, dt if step < n_steps else last_h)
        except FloatingPointError as e:
            raise DivergenceError(step, t) from e
        if not np.all(np.isfinite(y)):
            raise DivergenceError(step, t)
        if observer is not None:
            observer(step, t, y)
    return y
