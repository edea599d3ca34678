import logging

import numpy as np

from common.exceptions import CoincidentParticlesError, ConvergenceError
from common.schemas import Vector
from dynamics.config import integrator_config
from dynamics.integrator import rk4_integrate
from dynamics.rhs import aggregation_field, aggregation_rhs
from experiments.config import experiments_config
from jacobians.aggregation import assemble_G
from jacobians.schemas import StationaryConfig
from potentials.schemas import PotentialSpec

logger = logging.getLogger(__name__)

MIN_STEP_FRACTION = 1e-6


def random_disc(N: int, radius: float, rng: np.random.Generator) -> Vector:
    r = radius * np.sqrt(rng.random(N))
    theta = 2 * np.pi * rng.random(N)
    return np.column_stack([r * np.cos(theta), r * np.sin(theta)]).ravel()


def _residual(spec: PotentialSpec, x: Vector) -> Vector | None:
    try:
        return aggregation_rhs(spec, x)
    except CoincidentParticlesError:
        return None


def newton_polish(
    spec: PotentialSpec, x: Vector, steps: int | None = None, tol: float | None = None
) -> Vector:
    """Damped Newton on the aggregation field with the analytic Jacobian.

    G is singular along translations and rotation, so every step is the
    minimum-norm least-squares solution. Steps are halved until the residual
    2-norm decreases; iteration stops once the sup-norm drops below `tol` or
    no decrease can be found.
    """
    steps = experiments_config.NEWTON_STEPS if steps is None else steps
    tol = experiments_config.NEWTON_TOL if tol is None else tol

    f = aggregation_rhs(spec, x)
    for iteration in range(steps):
        sup = np.abs(f).max(initial=0.0)
        if sup < tol:
            break
        G = assemble_G(StationaryConfig(x=x, spec=spec, residual=sup))
        delta, *_ = np.linalg.lstsq(G, -f, rcond=None)

        norm = np.linalg.norm(f)
        step = 1.0
        while step > MIN_STEP_FRACTION:
            trial = x + step * delta
            f_trial = _residual(spec, trial)
            if f_trial is not None and np.linalg.norm(f_trial) < norm:
                break
            step /= 2
        else:
            logger.debug('Newton stalled at residual %.3e', sup)
            break
        x, f = trial, f_trial
        logger.debug('Newton step %d: residual %.3e', iteration + 1, np.abs(f).max())
    return x


def find_stationary_state(
    spec: PotentialSpec,
    N: int,
    refine_D: float | None = None,
    refine_T: float | None = None,
    dt: float | None = None,
    seed: int = 0,
    tol: float | None = None,
) -> StationaryConfig:
    """Relax seeded random data under W_{refine_D}, then Newton-polish under `spec`.

    Stationary states do not depend on D, so relaxation may use any scaling;
    the returned residual is measured for `spec` itself. Raises
    ConvergenceError when `tol` is given and not reached.
    """
    refine_D = experiments_config.REFINE_D if refine_D is None else refine_D
    refine_T = experiments_config.REFINE_T if refine_T is None else refine_T
    dt = integrator_config.REFINE_DT if dt is None else dt

    rng = np.random.default_rng(seed)
    x = random_disc(N, experiments_config.INIT_DISC_RADIUS, rng)
    if N > 1:
        logger.info(
            'Relaxing %d %s particles at D = %g over T = %g (dt = %g)',
            N,
            spec.family,
            refine_D,
            refine_T,
            dt,
        )
        x = rk4_integrate(aggregation_field(spec.scaled(refine_D)), x, dt, refine_T)
        x = (x.reshape(-1, 2) - x.reshape(-1, 2).mean(axis=0)).ravel()
        x = newton_polish(spec, x)

    config = StationaryConfig.from_positions(spec, x)
    logger.info('Stationary state for N = %d: residual %.3e', N, config.residual)
    if tol is not None and not config.residual < tol:
        raise ConvergenceError(
            f'stationary-state residual {config.residual:.3e} is above {tol:.3e}'
        )
    return config
