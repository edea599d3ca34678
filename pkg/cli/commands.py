import logging
from collections.abc import Callable
from pathlib import Path

import numpy as np

from cli.config import RunConfig, dump_run_config
from cli.renderer import renderer
from cli.schemas import SpectrumOutput
from cli.steady_file import read_steady_file, write_steady_file
from common.schemas import ExitCode, FailureReason
from dynamics.trajectory import TrajectoryRecorder, write_trajectory_csv
from experiments.export import write_records_csv, write_stats_csv, write_table1_csv
from experiments.statistics import sweep_statistics
from experiments.steady import find_stationary_state
from experiments.sweep import monte_carlo_sweep, run_seed
from experiments.table1 import table1_pipeline
from hypotheses.report import build_report
from hypotheses.schemas import HypothesisReport
from jacobians.aggregation import assemble_G, normalized
from jacobians.export import write_dense_matrix
from jacobians.meanvel import assemble_FBB, flock_member
from jacobians.schemas import StationaryConfig
from linalg.francis import general_eigenvalues
from linalg.jacobi import symmetric_eigen
from potentials.schemas import reference_potentials

logger = logging.getLogger(__name__)

type Command = Callable[[RunConfig, Path, Path | None], ExitCode]

SPECTRUM_FILE_NAME = 'spectrum.json'
REPORT_FILE_NAME = 'report.json'
RECORDS_FILE_NAME = 'records.csv'
STATS_FILE_NAME = 'stats.csv'
PERT_STATS_FILE_NAME = 'pert_stats.csv'
TABLE1_FILE_NAME = 'table1.csv'
G_MATRIX_FILE_NAME = 'G.txt'
FBB_MATRIX_FILE_NAME = 'FBB.txt'
TRAJECTORY_FILE_NAME = 'trajectory.csv'


def _stationary_state(config: RunConfig) -> StationaryConfig:
    return find_stationary_state(
        config.potential,
        config.N,
        refine_D=config.table1.refine_D,
        refine_T=config.table1.refine_T,
        dt=config.table1.refine_dt,
        seed=config.seeds.base_seed,
        tol=config.tolerances.h1_tol,
    )


def _load_stationary_state(steady: Path | None) -> StationaryConfig:
    if steady is None:
        raise FileNotFoundError('this command needs a steady-state file (--steady)')
    return read_steady_file(steady).config


def cmd_find_steady(
    config: RunConfig, out_dir: Path, steady: Path | None = None
) -> ExitCode:
    dump_run_config(config, out_dir)
    stationary = _stationary_state(config)
    path = write_steady_file(out_dir, stationary, config.seeds.base_seed)
    print(
        renderer.render(
            'steady',
            spec=stationary.spec,
            N=stationary.N,
            seed=config.seeds.base_seed,
            residual=stationary.residual,
            path=path,
        )
    )
    return ExitCode.SUCCESS


def cmd_spectrum(
    config: RunConfig, out_dir: Path, steady: Path | None = None
) -> ExitCode:
    stationary = _load_stationary_state(steady)
    dump_run_config(config, out_dir)
    kernel_tol = config.tolerances.kernel_tol

    G = assemble_G(stationary)
    G_spectrum = symmetric_eigen(G, kernel_tol)
    if G_spectrum.real.min() < 0:
        stationary, G_spectrum = normalized(stationary, G_spectrum)
        G = assemble_G(stationary)
    member = flock_member(stationary, config.model, config.m0_angle)
    FBB = assemble_FBB(member, config.model)
    FBB_spectrum = general_eigenvalues(FBB, kernel_tol)
    if config.output.dump_matrices:
        write_dense_matrix(out_dir / G_MATRIX_FILE_NAME, G)
        write_dense_matrix(out_dir / FBB_MATRIX_FILE_NAME, FBB)

    output = SpectrumOutput(
        N=stationary.N,
        D=stationary.spec.D,
        m0_angle=config.m0_angle,
        G=G_spectrum,
        FBB=FBB_spectrum,
    )
    path = out_dir / SPECTRUM_FILE_NAME
    path.write_text(
        output.model_dump_json(
            indent=2, exclude={'G': {'eigenvectors'}, 'FBB': {'eigenvectors'}}
        ),
        encoding='utf-8',
    )

    rest = FBB_spectrum.real[~FBB_spectrum.kernel_mask]
    real = G_spectrum.real
    print(
        renderer.render(
            'spectrum',
            output=output,
            g_mu4=float(real[3]) if real.size > 3 else None,
            g_abs_mu3=float(abs(real[2])) if real.size > 2 else None,
            fbb_max_re=float(rest.max()) if rest.size else None,
            path=path,
        )
    )
    return ExitCode.SUCCESS


def report_rows(report: HypothesisReport) -> list[tuple[str, str, bool]]:
    failed = set(report.failures)

    def ok(*reasons: FailureReason) -> bool:
        return failed.isdisjoint(reasons)

    overlap = f'{report.h5_min_overlap:.3e}'
    if report.h5_offending_eigenvalue is not None:
        overlap += f' (mu = {report.h5_offending_eigenvalue:.3e})'
    return [
        (
            'H1 stationarity residual',
            f'{report.h1_residual:.3e}',
            ok(FailureReason.NOT_STATIONARY),
        ),
        (
            'H2 kernel dimension of G',
            str(report.h2_kernel_dim),
            ok(FailureReason.KERNEL_DIMENSION, FailureReason.KERNEL_SPAN),
        ),
        ('H3 mu4', f'{report.h3_mu4:.3e}', ok(FailureReason.NONNEGATIVE_SPECTRUM)),
        (
            'H4 line deviation',
            f'{report.h4_line_deviation:.3e}',
            ok(FailureReason.COLLINEAR),
        ),
        ('H5 minimal overlap', overlap, ok(FailureReason.ORTHOGONAL_EIGENVECTOR)),
        (
            'simple zero eigenvalue',
            str(report.lemma3_no_genvec),
            report.lemma3_no_genvec,
        ),
        (
            'reduced kernel dimension',
            str(report.lemma4_kernel_dim),
            ok(FailureReason.LEMMA4_KERNEL, FailureReason.LEMMA4_SPECTRUM),
        ),
        (
            '-2 alpha in spectrum of F',
            str(report.full_F_has_minus_two_alpha),
            report.full_F_has_minus_two_alpha,
        ),
    ]


def cmd_check_hypotheses(
    config: RunConfig, out_dir: Path, steady: Path | None = None
) -> ExitCode:
    stationary = _load_stationary_state(steady)
    dump_run_config(config, out_dir)
    report = build_report(
        stationary,
        config.model,
        m0_angle=config.m0_angle,
        tolerances=config.tolerances.as_tolerances(),
    )
    path = out_dir / REPORT_FILE_NAME
    path.write_text(report.model_dump_json(indent=2), encoding='utf-8')
    print(renderer.render('hypotheses', report=report, rows=report_rows(report)))
    return ExitCode.SUCCESS if report.passed else ExitCode.HYPOTHESIS_FAILURE


def cmd_perturb_sweep(
    config: RunConfig, out_dir: Path, steady: Path | None = None
) -> ExitCode:
    stationary = (
        _stationary_state(config) if steady is None else _load_stationary_state(steady)
    )
    dump_run_config(config, out_dir)
    member = flock_member(stationary, config.model, config.m0_angle)
    records = monte_carlo_sweep(
        member,
        config.model,
        n_sims=config.sweep.n_sims,
        a_max=config.sweep.a_max,
        T=config.integrator.T,
        dt=config.integrator.dt,
        base_seed=config.seeds.base_seed,
        threads=config.threads,
    )
    if config.output.trajectory_every is not None:
        recorder = TrajectoryRecorder(config.output.trajectory_every)
        run_seed(
            member,
            config.model,
            config.sweep.a_max,
            config.integrator.T,
            config.integrator.dt,
            config.seeds.base_seed,
            recorder=recorder,
        )
        write_trajectory_csv(out_dir / TRAJECTORY_FILE_NAME, recorder.snapshots)
    stats = sweep_statistics(records, config.sweep.n_bins)
    path = write_records_csv(out_dir / RECORDS_FILE_NAME, records)
    write_stats_csv(out_dir / STATS_FILE_NAME, out_dir / PERT_STATS_FILE_NAME, stats)
    print(
        renderer.render(
            'sweep',
            records=records,
            diverged=sum(record.diverged for record in records),
            stats=stats,
            path=path,
        )
    )
    return ExitCode.SUCCESS


def cmd_table1(
    config: RunConfig, out_dir: Path, steady: Path | None = None
) -> ExitCode:
    dump_run_config(config, out_dir)
    settings = config.table1
    potentials = reference_potentials()
    rows = [
        table1_pipeline(
            potentials[family],
            N,
            refine_D=settings.refine_D,
            refine_T=settings.refine_T,
            normalize=settings.normalize,
            dt=settings.refine_dt,
            seed=config.seeds.base_seed,
            h1_tol=config.tolerances.h1_tol,
            kernel_tol=config.tolerances.kernel_tol,
        )
        for family in settings.potentials
        for N in settings.N_values
    ]
    negative = np.array([row.mu4 for row in rows]) < 0
    if not negative.all():
        logger.warning('%d row(s) with non-negative mu4', int((~negative).sum()))
    path = write_table1_csv(out_dir / TABLE1_FILE_NAME, rows)
    print(renderer.render('table1', rows=rows, path=path))
    return ExitCode.SUCCESS


COMMANDS: dict[str, Command] = {
    'find-steady': cmd_find_steady,
    'spectrum': cmd_spectrum,
    'check-hypotheses': cmd_check_hypotheses,
    'perturb-sweep': cmd_perturb_sweep,
    'reproduce-table1': cmd_table1,
}
