import logging

import numpy as np

from common.schemas import FailureReason
from dynamics.schemas import ModelParams
from hypotheses.checks import (
    check_H1,
    check_H2_H3,
    check_H4,
    check_H5,
    quadratic_relation_residuals,
    verify_lemma3,
    verify_lemma4,
)
from hypotheses.config import hypotheses_config
from hypotheses.schemas import HypothesisReport, Tolerances
from jacobians.aggregation import assemble_G, normalized
from jacobians.meanvel import (
    assemble_F,
    assemble_FBB,
    flock_kernel_vectors_z,
    flock_member,
    split_FBB,
)
from jacobians.schemas import StationaryConfig
from linalg.francis import general_eigenvalues
from linalg.jacobi import symmetric_eigen

logger = logging.getLogger(__name__)


def build_report(
    config: StationaryConfig,
    params: ModelParams,
    m0_angle: float | None = None,
    tolerances: Tolerances | None = None,
    normalize: bool = True,
) -> HypothesisReport:
    """Run every check on one stationary state.

    With `normalize`, D is first rescaled so that min sigma(G) = -1, which
    makes the absolute tolerances comparable across potentials and N.
    """
    m0_angle = hypotheses_config.M0_ANGLE if m0_angle is None else m0_angle
    tolerances = tolerances or Tolerances()
    kernel_tol = tolerances.kernel_tol

    logger.info('Checking hypotheses for %s, N = %d', config.spec.family, config.N)
    spectrum = symmetric_eigen(assemble_G(config), kernel_tol)
    if normalize and spectrum.real.min() < 0:
        config, spectrum = normalized(config, spectrum)
    elif normalize:
        logger.warning('G has no negative eigenvalue, keeping D = %g', config.spec.D)
    G = assemble_G(config)

    failures: list[FailureReason] = []
    h1 = check_H1(config, tolerances.h1_tol)
    h23 = check_H2_H3(G, config.x, kernel_tol, spectrum, tolerances.span_tol)
    h4 = check_H4(config.x, tolerances.h4_tol)

    member = flock_member(config, params, m0_angle)
    h5 = check_H5(spectrum, member.m0, tolerances.h5_tol)
    failures.extend(r.reason for r in (h1, h23, h4, h5) if not r.passed)

    FBB = assemble_FBB(member, params)
    FBB_spectrum = general_eigenvalues(FBB, kernel_tol)
    lemma3 = verify_lemma3(FBB, kernel_tol, FBB_spectrum)
    if not lemma3:
        failures.append(FailureReason.GENERALIZED_EIGENVECTOR)
    lemma4 = verify_lemma4(
        FBB,
        params,
        kernel_tol,
        z_vectors=flock_kernel_vectors_z(member),
        spectrum=FBB_spectrum,
        span_tol=tolerances.span_tol,
        match_tol=tolerances.eigenvalue_match_tol,
    )
    if not lemma4.passed:
        failures.append(lemma4.reason)

    F_spectrum = general_eigenvalues(assemble_F(member, params), kernel_tol)
    full_F_has_minus_two_alpha = bool(
        np.abs(F_spectrum.eigenvalues + 2.0 * params.alpha).min()
        < tolerances.eigenvalue_match_tol
    )
    if not full_F_has_minus_two_alpha:
        failures.append(FailureReason.MISSING_EIGENVALUE)

    H, _ = split_FBB(FBB)
    residuals = quadratic_relation_residuals(
        H, G, member.m0, params.beta, kernel_tol=kernel_tol
    )
    quadratic_residual = float(residuals.max(initial=0.0))

    for reason in failures:
        logger.warning('Hypothesis check failed: %s', reason)
    return HypothesisReport(
        N=config.N,
        D=config.spec.D,
        m0_angle=m0_angle,
        h1_residual=h1.residual,
        h2_kernel_dim=h23.kernel_dim,
        h2_span_check=h23.span_residual,
        h3_mu4=h23.mu4,
        h3_abs_mu3=h23.abs_mu3,
        gap=h23.gap,
        h4_line_deviation=h4.line_deviation,
        h5_min_overlap=h5.min_overlap,
        h5_offending_eigenvalue=h5.offending_eigenvalue,
        lemma3_no_genvec=lemma3,
        lemma4_kernel_dim=lemma4.kernel_dim,
        lemma4_max_nonzero_re=lemma4.max_nonzero_re,
        lemma4_kernel_residual=lemma4.kernel_residual,
        full_F_has_minus_two_alpha=full_F_has_minus_two_alpha,
        quadratic_residual=quadratic_residual,
        failures=list(dict.fromkeys(failures)),
        tolerances=tolerances,
    )
