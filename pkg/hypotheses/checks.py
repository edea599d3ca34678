import logging
import math

import numpy as np

from common.exceptions import ToleranceMismatchError
from common.schemas import FailureReason, Matrix, Vector
from dynamics.rhs import aggregation_rhs
from dynamics.schemas import ModelParams
from hypotheses.config import hypotheses_config
from hypotheses.schemas import (
    CollinearityResult,
    KernelResult,
    Lemma4Result,
    OverlapResult,
    StationarityResult,
)
from jacobians.aggregation import kernel_vectors_w
from jacobians.schemas import StationaryConfig
from linalg.francis import general_eigenvalues
from linalg.jacobi import symmetric_eigen
from linalg.rank import kernel_basis, numerical_rank, pivoted_qr
from linalg.schemas import Spectrum

logger = logging.getLogger(__name__)

INVERSE_ITERATIONS = 3


def check_H1(config: StationaryConfig, tol: float) -> StationarityResult:
    residual = float(np.abs(aggregation_rhs(config.spec, config.x)).max())
    reason = FailureReason.SUCCESS if residual < tol else FailureReason.NOT_STATIONARY
    return StationarityResult(reason=reason, residual=residual)


def _projection_residual(basis: Matrix, vector: Vector) -> float:
    norm = np.linalg.norm(vector)
    if norm == 0:
        return 0.0
    unit = vector / norm
    return float(np.linalg.norm(unit - basis @ (basis.T @ unit)))


def check_H2_H3(
    G: Matrix,
    x: Vector,
    kernel_tol: float,
    spectrum: Spectrum | None = None,
    span_tol: float | None = None,
) -> KernelResult:
    span_tol = hypotheses_config.SPAN_TOL if span_tol is None else span_tol
    if spectrum is None or spectrum.eigenvectors is None:
        spectrum = symmetric_eigen(G, kernel_tol)
    else:
        spectrum = spectrum.model_copy(update={'kernel_tol': kernel_tol})

    real = spectrum.real
    mu4 = float(real[3]) if len(real) > 3 else math.nan
    abs_mu3 = float(abs(real[2])) if len(real) > 2 else math.nan

    mask = spectrum.kernel_mask
    kernel = spectrum.eigenvectors[:, mask]
    span_residual = max(_projection_residual(kernel, w) for w in kernel_vectors_w(x))
    threshold = kernel_tol * (spectrum.spectral_radius or 1.0)

    if spectrum.kernel_dim != 3:
        reason = FailureReason.KERNEL_DIMENSION
    elif span_residual > span_tol:
        reason = FailureReason.KERNEL_SPAN
    elif not mu4 < -threshold:
        reason = FailureReason.NONNEGATIVE_SPECTRUM
    else:
        reason = FailureReason.SUCCESS
    return KernelResult(
        reason=reason,
        kernel_dim=spectrum.kernel_dim,
        span_residual=span_residual,
        mu4=mu4,
        abs_mu3=abs_mu3,
    )


def check_H4(x: Vector, tol: float) -> CollinearityResult:
    points = np.asarray(x, dtype=np.float64).reshape(-1, 2)
    if len(points) < 2:
        raise ValueError('collinearity needs at least two particles')
    centered = points - points.mean(axis=0)
    # smallest singular value of the centered N x 2 position matrix
    scatter = symmetric_eigen(centered.T @ centered)
    deviation = math.sqrt(max(float(scatter.real[-1]), 0.0))
    reason = FailureReason.SUCCESS if deviation > tol else FailureReason.COLLINEAR
    return CollinearityResult(reason=reason, line_deviation=deviation)


def check_H5(G_spectrum: Spectrum, m0: Vector, tol: float) -> OverlapResult:
    if G_spectrum.eigenvectors is None:
        raise ValueError(
            'eigenvector overlaps need a symmetric spectrum with eigenvectors'
        )
    vectors = G_spectrum.eigenvectors[:, ~G_spectrum.kernel_mask]
    if vectors.shape[1] == 0:
        return OverlapResult(min_overlap=math.inf)

    pairs = vectors.reshape(-1, 2, vectors.shape[1])
    overlaps = np.abs(np.einsum('c,icv->iv', np.asarray(m0), pairs)).max(axis=0)
    worst = int(np.argmin(overlaps))
    min_overlap = float(overlaps[worst])
    if min_overlap > tol:
        return OverlapResult(min_overlap=min_overlap)

    eigenvalue = float(G_spectrum.real[~G_spectrum.kernel_mask][worst])
    logger.warning(
        'Eigenvector for %.6g is particle-wise orthogonal to m0 (overlap %.3e)',
        eigenvalue,
        min_overlap,
    )
    return OverlapResult(
        reason=FailureReason.ORTHOGONAL_EIGENVECTOR,
        min_overlap=min_overlap,
        offending_eigenvalue=eigenvalue,
    )


def _rank_tol(A: Matrix, spectrum: Spectrum, kernel_tol: float) -> float:
    # same absolute threshold as the eigenvalue count, kernel_tol * rho(A)
    norm = np.linalg.norm(A)
    if norm == 0:
        return kernel_tol
    return kernel_tol * (spectrum.spectral_radius or 1.0) / norm


def verify_lemma3(
    FBB: Matrix, kernel_tol: float, spectrum: Spectrum | None = None
) -> bool:
    """True when zero has no generalized eigenvector.

    Two tests must agree: algebraic against geometric multiplicity, and the
    rank of A against the rank of A followed by projection off ker(A). The
    latter drops exactly by dim(ker A intersected with range A).
    """
    A = np.asarray(FBB, dtype=np.float64)
    if spectrum is None:
        spectrum = general_eigenvalues(A, kernel_tol)
    else:
        spectrum = spectrum.model_copy(update={'kernel_tol': kernel_tol})
    tol = _rank_tol(A, spectrum, kernel_tol)

    kernel = kernel_basis(A, tol)
    algebraic = spectrum.kernel_dim
    geometric = kernel.shape[1]
    counts_agree = algebraic == geometric

    if geometric:
        q, _, _ = pivoted_qr(kernel)
        complement = q[:, geometric:]
    else:
        complement = np.eye(len(A))
    rank = numerical_rank(A, tol)
    projected_rank = numerical_rank(complement.T @ A, tol)
    ranks_agree = rank == projected_rank

    logger.debug(
        'Zero eigenvalue: algebraic %d, geometric %d, rank %d, projected rank %d',
        algebraic,
        geometric,
        rank,
        projected_rank,
    )
    if counts_agree != ranks_agree:
        raise ToleranceMismatchError(
            f'multiplicity test says {counts_agree}, rank test says {ranks_agree} '
            f'(algebraic {algebraic}, geometric {geometric}, '
            f'rank {rank}, projected rank {projected_rank})'
        )
    return counts_agree


def verify_lemma4(
    FBB: Matrix,
    params: ModelParams,
    kernel_tol: float,
    z_vectors: tuple[Vector, ...] | None = None,
    spectrum: Spectrum | None = None,
    span_tol: float | None = None,
    match_tol: float | None = None,
) -> Lemma4Result:
    span_tol = hypotheses_config.SPAN_TOL if span_tol is None else span_tol
    if match_tol is None:
        match_tol = hypotheses_config.EIGENVALUE_MATCH_TOL
    A = np.asarray(FBB, dtype=np.float64)
    if spectrum is None:
        spectrum = general_eigenvalues(A, kernel_tol)
    else:
        spectrum = spectrum.model_copy(update={'kernel_tol': kernel_tol})

    mask = spectrum.kernel_mask
    nonzero = spectrum.real[~mask]
    max_nonzero_re = float(nonzero.max()) if len(nonzero) else -math.inf
    has_minus_two_alpha = bool(
        np.abs(spectrum.eigenvalues + 2.0 * params.alpha).min(initial=math.inf)
        < match_tol
    )

    kernel_residual = 0.0
    if z_vectors:
        kernel = kernel_basis(A, _rank_tol(A, spectrum, kernel_tol))
        kernel_residual = max(_projection_residual(kernel, z) for z in z_vectors)

    threshold = kernel_tol * (spectrum.spectral_radius or 1.0)
    if spectrum.kernel_dim != 4 or kernel_residual > span_tol:
        reason = FailureReason.LEMMA4_KERNEL
    elif not max_nonzero_re < -threshold:
        reason = FailureReason.LEMMA4_SPECTRUM
    elif not has_minus_two_alpha:
        reason = FailureReason.MISSING_EIGENVALUE
    else:
        reason = FailureReason.SUCCESS
    return Lemma4Result(
        reason=reason,
        kernel_dim=spectrum.kernel_dim,
        kernel_residual=kernel_residual,
        max_nonzero_re=max_nonzero_re,
        has_minus_two_alpha=has_minus_two_alpha,
    )


def _inverse_iteration(A: Matrix, eigenvalue: complex, rng: np.random.Generator):
    size = len(A)
    shift = eigenvalue + 1e-10 * max(1.0, abs(eigenvalue))
    shifted = A.astype(np.complex128) - shift * np.eye(size)
    y = rng.normal(size=size) + 1j * rng.normal(size=size)
    for _ in range(INVERSE_ITERATIONS):
        y = np.linalg.solve(shifted, y)
        y /= np.linalg.norm(y)
    return y


def quadratic_relation_residuals(
    H: Matrix,
    G: Matrix,
    m0: Vector,
    beta: float,
    pairs: int | None = None,
    kernel_tol: float | None = None,
    seed: int = 0,
) -> Vector:
    """|mu - (-A +- sqrt(A^2 - B))| for eigenpairs of H.

    A = beta * sum_i |<m0, x_i>|^2 and B = -conj(x)^T G x come from the unit
    position part x of each eigenvector, obtained by inverse iteration.
    """
    pairs = hypotheses_config.QUADRATIC_PAIRS if pairs is None else pairs
    kernel_tol = hypotheses_config.KERNEL_TOL if kernel_tol is None else kernel_tol
    n = len(G)
    spectrum = general_eigenvalues(H, kernel_tol)
    candidates = spectrum.eigenvalues[~spectrum.kernel_mask]
    if len(candidates) == 0:
        return np.zeros(0)
    picks = np.unique(np.linspace(0, len(candidates) - 1, pairs).round().astype(int))

    rng = np.random.default_rng(seed)
    residuals = []
    for mu in candidates[picks]:
        z = _inverse_iteration(np.asarray(H), mu, rng)
        x = z[:n] / np.linalg.norm(z[:n])
        pair_overlaps = x.reshape(-1, 2) @ np.asarray(m0)
        A = beta * float(np.sum(np.abs(pair_overlaps) ** 2))
        B = -float(np.real(np.conj(x) @ G @ x))
        root = np.sqrt(complex(A * A - B))
        residuals.append(min(abs(mu - (-A + root)), abs(mu - (-A - root))))
    return np.array(residuals)
