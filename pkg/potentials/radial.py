import math

import numpy as np

from common.exceptions import CoincidentParticlesError, DomainError
from common.schemas import Matrix, Vector
from potentials.bessel import modified_bessel_k
from potentials.schemas import PotentialFamily, PotentialSpec

type Profile = tuple[Vector, Vector, Vector]


def _morse_profile(r: Vector) -> Profile:
    e = np.exp(-r)
    return -e, e, -e


def _quasi_morse_profile(r: Vector, k: float) -> Profile:
    kr = k * r
    k0, k1 = modified_bessel_k(kr)
    scale = 1.0 / (2.0 * math.pi)
    return (
        -scale * k0,
        scale * k * k1,
        -scale * k * k * (k0 + k1 / kr),
    )


def _generalized_morse_profile(r: Vector, p: float) -> Profile:
    e = np.exp(-(r**p) / p)
    return (
        -e,
        r ** (p - 1) * e,
        ((p - 1) * r ** (p - 2) - r ** (2 * p - 2)) * e,
    )


def _base_profile(spec: PotentialSpec, r: Vector) -> Profile:
    match spec.family:
        case PotentialFamily.MORSE:
            return _morse_profile(r)
        case PotentialFamily.QUASI_MORSE:
            return _quasi_morse_profile(r, spec.k)
        case PotentialFamily.GENERALIZED_MORSE:
            return _generalized_morse_profile(r, spec.p)
    raise ValueError(f'{spec.family} has no Morse-type base profile')


def _profile(spec: PotentialSpec, r: Vector) -> Profile:
    if spec.family == PotentialFamily.LOG_NEWTONIAN:
        value = r * r - np.log(r)
        first = 2.0 * r - 1.0 / r
        second = 2.0 + 1.0 / (r * r)
    else:
        near = _base_profile(spec, r)
        far = _base_profile(spec, r / spec.ell)
        C, ell = spec.C, spec.ell
        value = near[0] - C * far[0]
        first = near[1] - C / ell * far[1]
        second = near[2] - C / (ell * ell) * far[2]
    return spec.D * value, spec.D * first, spec.D * second


def _radii(r: float | Vector) -> Vector:
    radii = np.asarray(r, dtype=np.float64)
    if np.any(~(radii > 0)):
        raise DomainError('radial potentials are evaluated at r > 0 only')
    return radii


def potential_value(spec: PotentialSpec, r: float | Vector) -> float | Vector:
    value, _, _ = _profile(spec, _radii(r))
    return float(value) if np.ndim(r) == 0 else value


def radial_derivatives(
    spec: PotentialSpec, r: float | Vector
) -> tuple[float, float] | tuple[Vector, Vector]:
    _, first, second = _profile(spec, _radii(r))
    if np.ndim(r) == 0:
        return float(first), float(second)
    return first, second


def _separations(x: Vector) -> Vector:
    points = np.asarray(x, dtype=np.float64)
    r = np.linalg.norm(points, axis=-1)
    if np.any(r == 0):
        raise CoincidentParticlesError(
            'W is not differentiable at coincident particles'
        )
    return r


def grad_W(spec: PotentialSpec, x: Vector) -> Vector:
    points = np.asarray(x, dtype=np.float64)
    r = _separations(points)
    first, _ = radial_derivatives(spec, r)
    return (np.asarray(first) / r)[..., None] * points


def hess_W(spec: PotentialSpec, x: Vector) -> Matrix:
    points = np.asarray(x, dtype=np.float64)
    r = _separations(points)
    first, second = radial_derivatives(spec, r)
    unit = points / r[..., None]
    radial = unit[..., :, None] * unit[..., None, :]
    tangential = np.eye(2) - radial
    return (
        np.asarray(second)[..., None, None] * radial
        + (np.asarray(first) / r)[..., None, None] * tangential
    )


def interaction_energy(spec: PotentialSpec, x: Vector) -> float:
    points = np.asarray(x, dtype=np.float64).reshape(-1, 2)
    i, j = np.triu_indices(len(points), k=1)
    if len(i) == 0:
        return 0.0
    r = _separations(points[i] - points[j])
    return float(np.sum(potential_value(spec, r)))
