import logging

from common.exceptions import ConvergenceError
from experiments.schemas import NormalizeMode, Table1Row
from experiments.steady import find_stationary_state
from hypotheses.config import hypotheses_config
from jacobians.aggregation import assemble_G, normalization_factor
from linalg.jacobi import symmetric_eigen
from potentials.schemas import PotentialSpec

logger = logging.getLogger(__name__)


def table1_pipeline(
    spec: PotentialSpec,
    N: int,
    refine_D: float | None = None,
    refine_T: float | None = None,
    normalize: NormalizeMode = NormalizeMode.NORMALIZE,
    dt: float | None = None,
    seed: int = 0,
    h1_tol: float | None = None,
    kernel_tol: float | None = None,
) -> Table1Row:
    """mu4, |mu3| and the reported D for one potential and particle count.

    In normalize mode D is chosen so that min sigma(G) = -1, using linearity
    of G in D instead of a second eigen-solve; in fixed mode spec.D is kept.
    """
    h1_tol = hypotheses_config.H1_TOL if h1_tol is None else h1_tol
    kernel_tol = hypotheses_config.KERNEL_TOL if kernel_tol is None else kernel_tol

    config = find_stationary_state(spec, N, refine_D, refine_T, dt, seed)
    unit = config.scaled(1.0)
    spectrum = symmetric_eigen(assemble_G(unit), kernel_tol)

    if normalize == NormalizeMode.NORMALIZE:
        D = normalization_factor(spectrum)
    else:
        D = spec.D
    spectrum = spectrum.scaled(D)

    residual = unit.residual * D
    if not residual < h1_tol:
        raise ConvergenceError(
            f'{spec.family} N = {N}: stationary residual {residual:.3e} at D = {D:.6g}'
            f' is above {h1_tol:.3e}'
        )

    real = spectrum.real
    mu4, abs_mu3 = float(real[3]), float(abs(real[2]))
    row = Table1Row(
        potential=str(spec.family),
        params=Table1Row.describe(spec),
        N=N,
        mu4=mu4,
        abs_mu3=abs_mu3,
        D=D,
        kernel_dim=spectrum.kernel_dim,
        gap=abs(mu4) / abs_mu3 if abs_mu3 else float('inf'),
    )
    logger.info(
        '%s N = %d: mu4 = %.4e, |mu3| = %.4e, D = %.4f',
        row.potential,
        N,
        mu4,
        abs_mu3,
        D,
    )
    return row
