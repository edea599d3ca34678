import logging
from collections.abc import Callable

import numpy as np

from common.schemas import Vector
from dynamics.schemas import MeanVelState, ModelParams, ParticleState
from potentials.radial import grad_W
from potentials.schemas import PotentialSpec

logger = logging.getLogger(__name__)

type VectorField = Callable[[Vector], Vector]


def pairwise_forces(spec: PotentialSpec, x: Vector) -> Vector:
    points = np.asarray(x, dtype=np.float64).reshape(-1, 2)
    forces = np.zeros_like(points)
    i, j = np.triu_indices(len(points), k=1)
    if len(i):
        gradients = grad_W(spec, points[i] - points[j])
        # grad W is odd, so each pair acts on j with the opposite sign
        np.add.at(forces, i, gradients)
        np.add.at(forces, j, -gradients)
    return forces.ravel()


def aggregation_rhs(spec: PotentialSpec, x: Vector) -> Vector:
    return -pairwise_forces(spec, x)


def _self_propulsion(params: ModelParams, v: Vector) -> Vector:
    pairs = v.reshape(-1, 2)
    speed_squared = np.sum(pairs * pairs, axis=1, keepdims=True)
    return ((params.alpha - params.beta * speed_squared) * pairs).ravel()


def swarm_rhs(
    spec: PotentialSpec, params: ModelParams, s: ParticleState
) -> tuple[Vector, Vector]:
    dv = _self_propulsion(params, s.v) - pairwise_forces(spec, s.x)
    return s.v.copy(), dv


def _meanvel_derivative(
    spec: PotentialSpec, params: ModelParams, x: Vector, v: Vector, m: Vector
) -> tuple[Vector, Vector, Vector]:
    absolute = (v.reshape(-1, 2) + m).ravel()
    propulsion = _self_propulsion(params, absolute).reshape(-1, 2)
    mean_propulsion = propulsion.mean(axis=0)
    dv = (propulsion - mean_propulsion).ravel() - pairwise_forces(spec, x)
    return v.copy(), dv, mean_propulsion


def meanvel_rhs(
    spec: PotentialSpec, params: ModelParams, q: MeanVelState
) -> tuple[Vector, Vector, Vector]:
    return _meanvel_derivative(spec, params, q.x, q.v, q.m)


def to_meanvel(s: ParticleState) -> MeanVelState:
    pairs = s.v.reshape(-1, 2)
    m = pairs.mean(axis=0)
    return MeanVelState(x=s.x, v=(pairs - m).ravel(), m=m)


def from_meanvel(q: MeanVelState) -> ParticleState:
    return ParticleState(x=q.x, v=(q.v.reshape(-1, 2) + q.m).ravel())


def aggregation_field(spec: PotentialSpec) -> VectorField:
    def field(y: Vector) -> Vector:
        return aggregation_rhs(spec, y)

    return field


def swarm_field(spec: PotentialSpec, params: ModelParams) -> VectorField:
    def field(y: Vector) -> Vector:
        n = len(y) // 2
        x, v = y[:n], y[n:]
        dv = _self_propulsion(params, v) - pairwise_forces(spec, x)
        return np.concatenate([v, dv])

    return field


def meanvel_field(spec: PotentialSpec, params: ModelParams) -> VectorField:
    def field(y: Vector) -> Vector:
        n = (len(y) - 2) // 2
        return np.concatenate(
            _meanvel_derivative(spec, params, y[:n], y[n : 2 * n], y[2 * n :])
        )

    return field
