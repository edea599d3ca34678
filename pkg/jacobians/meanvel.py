"""Linearization of the mean-velocity frame around a travelling flock.

State vectors are laid out as (x~, v~, m) with 2N + 2N + 2 entries. The
subspace of mean-velocity consistent perturbations is spanned by the columns
of `basis_B`; particle N is the redundant particle whose velocity deviation
is minus the sum of the others.
"""

import logging
import math

import numpy as np
from cachetools import LRUCache, cached

from common.exceptions import SpeedConstraintError
from common.schemas import Matrix, Vector
from dynamics.schemas import ModelParams
from jacobians.aggregation import assemble_G, kernel_vectors_w
from jacobians.schemas import FlockFamilyMember, StationaryConfig
from linalg.kron import kron, ones

logger = logging.getLogger(__name__)

SPEED_TOL = 1e-12


def flock_member(
    config: StationaryConfig, params: ModelParams, angle: float
) -> FlockFamilyMember:
    m0 = params.speed * np.array([math.cos(angle), math.sin(angle)])
    return FlockFamilyMember(config=config, m0=m0)


def _alignment_block(member: FlockFamilyMember, params: ModelParams) -> Matrix:
    speed = float(np.linalg.norm(member.m0))
    if abs(speed - params.speed) > SPEED_TOL * max(1.0, params.speed):
        raise SpeedConstraintError(
            f'|m0| = {speed:.15g} differs from sqrt(alpha/beta) = {params.speed:.15g}'
        )
    return 2.0 * params.beta * np.outer(member.m0, member.m0)


def assemble_F(member: FlockFamilyMember, params: ModelParams) -> Matrix:
    M = _alignment_block(member, params)
    N = member.config.N
    n = 2 * N
    centering = np.eye(N) - np.full((N, N), 1.0 / N)

    F = np.zeros((2 * n + 2, 2 * n + 2))
    F[:n, n : 2 * n] = np.eye(n)
    F[n : 2 * n, :n] = assemble_G(member.config)
    F[n : 2 * n, n : 2 * n] = -kron(centering, M)
    F[2 * n :, n : 2 * n] = -kron(ones(N).T, M / N)
    F[2 * n :, 2 * n :] = -M
    return F


@cached(cache=LRUCache(maxsize=16))
def basis_B(N: int) -> Matrix:
    """(4N + 2) x 4N matrix whose columns span the consistent perturbations."""
    if N < 2:
        raise ValueError('the consistent subspace needs at least two particles')
    n = 2 * N
    B = np.zeros((2 * n + 2, 2 * n))
    B[:n, :n] = np.eye(n)
    deviations = np.arange(n - 2)
    B[n + deviations, n + deviations] = 1.0
    B[n + (n - 2) + deviations % 2, n + deviations] = -1.0
    B[2 * n :, 2 * n - 2 :] = np.eye(2)
    B.setflags(write=False)
    return B


def _split_velocity(dv: Vector) -> tuple[Vector, Vector]:
    pairs = np.asarray(dv, dtype=np.float64).reshape(-1, 2)
    mean = pairs.mean(axis=0)
    return (pairs - mean).ravel(), mean


def project_P(dx: Vector, dv: Vector) -> Vector:
    deviation, mean = _split_velocity(dv)
    return np.concatenate([np.asarray(dx, dtype=np.float64), deviation, mean])


def to_basis_coordinates(dx: Vector, dv: Vector) -> Vector:
    deviation, mean = _split_velocity(dv)
    return np.concatenate([np.asarray(dx, dtype=np.float64), deviation[:-2], mean])


def assemble_H(member: FlockFamilyMember, params: ModelParams) -> Matrix:
    M = _alignment_block(member, params)
    N = member.config.N
    n = 2 * N
    G = assemble_G(member.config)

    H = np.zeros((2 * n - 2, 2 * n - 2))
    H[:n, n:] = np.vstack([np.eye(n - 2), -kron(ones(N - 1).T, np.eye(2))])
    H[n:, :n] = G[: n - 2]
    H[n:, n:] = -kron(np.eye(N - 1), M)
    return H


def assemble_FBB(member: FlockFamilyMember, params: ModelParams) -> Matrix:
    H = assemble_H(member, params)
    M = _alignment_block(member, params)
    size = len(H) + 2
    FBB = np.zeros((size, size))
    FBB[:-2, :-2] = H
    FBB[-2:, -2:] = -M
    return FBB


def split_FBB(FBB: Matrix) -> tuple[Matrix, Matrix]:
    return FBB[:-2, :-2].copy(), FBB[-2:, -2:].copy()


def flock_kernel_vectors_z(member: FlockFamilyMember) -> tuple[Vector, ...]:
    N = member.config.N
    zeros = np.zeros(2 * N)
    translations_and_rotation = tuple(
        np.concatenate([w, zeros]) for w in kernel_vectors_w(member.config.x)
    )
    alignment = np.concatenate([zeros, zeros[:-2], member.m0_perp])
    return (*translations_and_rotation, alignment)
