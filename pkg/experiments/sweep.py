import logging
import math
from concurrent.futures import ProcessPoolExecutor, as_completed

import numpy as np

from common.exceptions import DivergenceError
from common.schemas import Vector
from dynamics.config import integrator_config
from dynamics.integrator import Observer, rk4_integrate
from dynamics.rhs import swarm_field
from dynamics.schemas import ModelParams
from experiments.config import experiments_config
from experiments.polarization import velocity_polarization
from experiments.schemas import SweepRecord
from jacobians.schemas import FlockFamilyMember

logger = logging.getLogger(__name__)

type Perturbation = tuple[Vector, Vector]


def sample_perturbation(a: float, N: int, rng: np.random.Generator) -> Perturbation:
    if a < 0:
        raise ValueError(f'perturbation strength must be non-negative, got {a}')
    dx = rng.uniform(-a / 2, a / 2, size=2 * N)
    dv = rng.uniform(-a / 2, a / 2, size=2 * N)
    return dx, dv


def perturbation_size(pert: Perturbation) -> float:
    dx, dv = pert
    per_particle = np.hstack([dx.reshape(-1, 2), dv.reshape(-1, 2)])
    return float(np.linalg.norm(per_particle, axis=1).mean())


class _PolarizationTracker:
    def __init__(self, n: int):
        self.n = n
        self.initial = math.nan
        self.minimum = math.inf
        self.last: Vector | None = None

    def __call__(self, step: int, t: float, y: Vector) -> None:
        pol = velocity_polarization(y[self.n :])
        if step == 0:
            self.initial = pol
        self.minimum = min(self.minimum, pol)
        self.last = y


def run_perturbed_flock(
    member: FlockFamilyMember,
    params: ModelParams,
    pert: Perturbation,
    T: float | None = None,
    dt: float | None = None,
    seed: int = 0,
    a: float = 0.0,
    recorder: Observer | None = None,
) -> SweepRecord:
    T = experiments_config.HORIZON if T is None else T
    dt = integrator_config.SWEEP_DT if dt is None else dt
    dx, dv = pert
    N = member.config.N
    x0 = member.config.x + dx
    v0 = np.tile(member.m0, N) + dv

    tracker = _PolarizationTracker(2 * N)

    def observe(step: int, t: float, y: Vector) -> None:
        tracker(step, t, y)
        if recorder is not None:
            recorder(step, t, y)

    diverged = False
    try:
        rk4_integrate(
            swarm_field(member.config.spec, params),
            np.concatenate([x0, v0]),
            dt,
            T,
            observer=observe,
        )
    except DivergenceError as e:
        logger.warning('Run with seed %d diverged: %s', seed, e)
        diverged = True

    final_speed = math.nan
    if not diverged:
        mean_velocity = tracker.last[2 * N :].reshape(-1, 2).mean(axis=0)
        final_speed = float(np.linalg.norm(mean_velocity))
    return SweepRecord(
        seed=seed,
        a=a,
        pert_l2_per_particle=perturbation_size(pert),
        pol_initial=tracker.initial,
        pol_min=tracker.minimum,
        diverged=diverged,
        final_speed=final_speed,
    )


def run_seed(
    member: FlockFamilyMember,
    params: ModelParams,
    a_max: float,
    T: float,
    dt: float,
    seed: int,
    recorder: Observer | None = None,
) -> SweepRecord:
    rng = np.random.default_rng(seed)
    a = a_max * (1.0 - rng.random())
    pert = sample_perturbation(a, member.config.N, rng)
    return run_perturbed_flock(
        member, params, pert, T, dt, seed=seed, a=a, recorder=recorder
    )


def monte_carlo_sweep(
    member: FlockFamilyMember,
    params: ModelParams,
    n_sims: int | None = None,
    a_max: float | None = None,
    T: float | None = None,
    dt: float | None = None,
    base_seed: int = 0,
    threads: int = 1,
) -> list[SweepRecord]:
    """Run k uses seed base_seed + k and a ~ U(0, a_max].

    Records come back in seed order.
    """
    n_sims = experiments_config.N_SIMS if n_sims is None else n_sims
    a_max = experiments_config.A_MAX if a_max is None else a_max
    T = experiments_config.HORIZON if T is None else T
    dt = integrator_config.SWEEP_DT if dt is None else dt
    if n_sims < 1:
        raise ValueError('a sweep needs at least one simulation')
    if not a_max > 0:
        raise ValueError(f'a_max must be positive, got {a_max}')

    seeds = [base_seed + k for k in range(n_sims)]
    logger.info(
        'Sweep: %d runs, N = %d, a_max = %g, T = %g, %d worker(s)',
        n_sims,
        member.config.N,
        a_max,
        T,
        threads,
    )
    progress_every = max(n_sims // 10, 1)
    records: list[SweepRecord] = []
    if threads <= 1:
        for seed in seeds:
            records.append(run_seed(member, params, a_max, T, dt, seed))
            if len(records) % progress_every == 0:
                logger.info('Sweep progress: %d/%d', len(records), n_sims)
        return records

    with ProcessPoolExecutor(max_workers=threads) as executor:
        futures = {
            executor.submit(run_seed, member, params, a_max, T, dt, seed): seed
            for seed in seeds
        }
        for future in as_completed(futures):
            records.append(future.result())
            if len(records) % progress_every == 0:
                logger.info('Sweep progress: %d/%d', len(records), n_sims)
    return sorted(records, key=lambda record: record.seed)
