import json

import pandas as pd
import pytest

from cli.config import load_run_config
from common.exceptions import ConvergenceError, DivergenceError, ToleranceMismatchError
from common.schemas import ExitCode
from experiments.schemas import Table1Row
from jacobians.export import read_dense_matrix
from linalg.jacobi import symmetric_eigen
from main import main


def test_find_steady_single_particle(tmp_path):
    out = tmp_path / 'out'
    assert main(['find-steady', '--N', '1', '--seed', '4', '--out', str(out)]) == (
        ExitCode.SUCCESS
    )
    document = json.loads((out / 'steady.json').read_text())
    assert document['payload']['seed'] == 4
    assert document['payload']['config']['residual'] == 0.0
    assert load_run_config(out / 'config.yml').N == 1


@pytest.mark.parametrize('error', [ConvergenceError, ToleranceMismatchError])
def test_numerical_failures(tmp_path, mocker, error):
    mocker.patch('cli.commands.find_stationary_state', side_effect=error('stalled'))
    assert main(['find-steady', '--out', str(tmp_path)]) == ExitCode.NON_CONVERGENCE


def test_divergence(tmp_path, mocker):
    mocker.patch(
        'cli.commands.find_stationary_state', side_effect=DivergenceError(12, 0.12)
    )
    assert main(['find-steady', '--out', str(tmp_path)]) == ExitCode.NON_CONVERGENCE


def test_malformed_config(tmp_path, write_config):
    path = write_config('N: [1,\n')
    code = main(['find-steady', '--config', str(path), '--out', str(tmp_path)])
    assert code == ExitCode.CONFIG_ERROR


def test_empty_perturbation_range(tmp_path, write_config, pair_steady_file):
    path = write_config('sweep: {a_max: 0.0}\n')
    code = main(
        [
            'perturb-sweep',
            '--config',
            str(path),
            '--steady',
            str(pair_steady_file),
            '--out',
            str(tmp_path / 'out'),
        ]
    )
    assert code == ExitCode.CONFIG_ERROR


def test_collinear_state_fails_hypotheses(tmp_path, pair_steady_file, capsys):
    out = tmp_path / 'out'
    code = main(['check-hypotheses', '--steady', str(pair_steady_file), '--out', str(out)])
    assert code == ExitCode.HYPOTHESIS_FAILURE
    report = json.loads((out / 'report.json').read_text())
    assert report['failures'] == ['collinear']
    assert 'all particles lie on a straight line' in capsys.readouterr().out


def test_spectrum(tmp_path, pair_steady_file):
    out = tmp_path / 'out'
    code = main(['spectrum', '--steady', str(pair_steady_file), '--out', str(out)])
    assert code == ExitCode.SUCCESS
    spectra = json.loads((out / 'spectrum.json').read_text())
    assert spectra['G']['kernel_dim'] == 3
    assert spectra['FBB']['kernel_dim'] == 4
    assert 'eigenvectors' not in spectra['G']
    assert min(re for re, _ in spectra['G']['eigenvalues']) == pytest.approx(-1.0)


def test_spectrum_matrices(tmp_path, pair_steady_file):
    out = tmp_path / 'out'
    code = main(
        [
            'spectrum',
            '--steady',
            str(pair_steady_file),
            '--out',
            str(out),
            '--dump-matrices',
        ]
    )
    assert code == ExitCode.SUCCESS
    G = read_dense_matrix(out / 'G.txt')
    assert G.shape == (4, 4)
    assert symmetric_eigen(G).real.min() == pytest.approx(-1.0)
    assert read_dense_matrix(out / 'FBB.txt').shape == (8, 8)


def test_corrupt_steady_file(tmp_path, pair_steady_file):
    pair_steady_file.write_text(pair_steady_file.read_text().replace('"seed": 3', '"seed": 4'))
    code = main(['spectrum', '--steady', str(pair_steady_file), '--out', str(tmp_path)])
    assert code == ExitCode.INPUT_ERROR


@pytest.mark.parametrize('command', ['spectrum', 'check-hypotheses'])
def test_coincident_steady_file(tmp_path, coincident_steady_file, command):
    out = tmp_path / 'out'
    code = main([command, '--steady', str(coincident_steady_file), '--out', str(out)])
    assert code == ExitCode.INPUT_ERROR


def test_missing_steady_file(tmp_path):
    code = main(
        ['check-hypotheses', '--steady', str(tmp_path / 'absent.json'), '--out', str(tmp_path)]
    )
    assert code == ExitCode.INPUT_ERROR


def test_steady_flag_is_required():
    with pytest.raises(SystemExit):
        main(['spectrum'])


def test_sweep_is_byte_identical(tmp_path, write_config, pair_steady_file):
    path = write_config(
        'integrator: {dt: 0.05, T: 1.0}\n'
        'seeds: {base_seed: 7}\n'
        'sweep: {n_sims: 3, a_max: 0.5, n_bins: 2}\n'
    )
    outputs = []
    for name in ('first', 'second'):
        out = tmp_path / name
        code = main(
            [
                'perturb-sweep',
                '--config',
                str(path),
                '--steady',
                str(pair_steady_file),
                '--out',
                str(out),
            ]
        )
        assert code == ExitCode.SUCCESS
        outputs.append(
            [(out / f).read_bytes() for f in ('records.csv', 'stats.csv', 'pert_stats.csv')]
        )
    assert outputs[0] == outputs[1]
    assert pd.read_csv(tmp_path / 'first' / 'records.csv').seed.tolist() == [7, 8, 9]


def test_reproduce_table1(tmp_path, write_config, mocker):
    def fake_row(spec, N, **kwargs):
        return Table1Row(
            potential=str(spec.family),
            params=Table1Row.describe(spec),
            N=N,
            mu4=-1e-4,
            abs_mu3=1e-14,
            D=2.0,
            kernel_dim=3,
            gap=1e10,
        )

    pipeline = mocker.patch('cli.commands.table1_pipeline', side_effect=fake_row)
    path = write_config('table1: {N_values: [25]}\n')
    out = tmp_path / 'out'
    assert main(['reproduce-table1', '--config', str(path), '--out', str(out)]) == (
        ExitCode.SUCCESS
    )
    assert pipeline.call_count == 4
    table = pd.read_csv(out / 'table1.csv')
    assert table.potential.tolist() == [
        'morse',
        'quasi_morse',
        'generalized_morse',
        'log_newtonian',
    ]
    assert (table.mu4 < 0).all()


def test_sweep_trajectory(tmp_path, write_config, pair_steady_file):
    path = write_config(
        'integrator: {dt: 0.05, T: 1.0}\n'
        'seeds: {base_seed: 7}\n'
        'sweep: {n_sims: 2, a_max: 0.5, n_bins: 2}\n'
    )
    out = tmp_path / 'out'
    code = main(
        [
            'perturb-sweep',
            '--config',
            str(path),
            '--steady',
            str(pair_steady_file),
            '--out',
            str(out),
            '--trajectory-every',
            '5',
        ]
    )
    assert code == ExitCode.SUCCESS
    trajectory = pd.read_csv(out / 'trajectory.csv')
    assert sorted(set(trajectory.t)) == pytest.approx([0.0, 0.25, 0.5, 0.75, 1.0])
    assert len(trajectory) == 5 * 2
    assert load_run_config(out / 'config.yml').output.trajectory_every == 5
