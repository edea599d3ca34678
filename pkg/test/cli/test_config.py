import re

import pytest

from cli.config import (
    RunConfig,
    apply_overrides,
    dump_run_config,
    load_run_config,
)
from common.exceptions import ConfigFileError
from experiments.schemas import NormalizeMode
from potentials.schemas import PotentialFamily


def test_valid_config(write_config):
    path = write_config(
        'N: 10\n'
        'potential: {family: quasi_morse, C: 1.1, ell: 0.75, k: 0.5}\n'
        'model: {alpha: 2.0, beta: 8.0}\n'
        'sweep: {n_sims: 5, a_max: 1.5}\n'
        'table1: {normalize: fixed, N_values: [25]}\n'
    )
    config = load_run_config(path)
    assert config.N == 10
    assert config.potential.family == PotentialFamily.QUASI_MORSE
    assert config.model.speed == pytest.approx(0.5)
    assert config.sweep.n_sims == 5
    assert config.sweep.n_bins == 20
    assert config.table1.normalize == NormalizeMode.FIXED
    assert config.tolerances.h1_tol == 1e-8


def test_empty_file_gives_defaults(write_config):
    assert load_run_config(write_config('')) == RunConfig()


def test_malformed_yaml_reports_line(write_config):
    path = write_config('N: 10\nsweep: {n_sims: 5\nmodel: {alpha: 1}\n')
    with pytest.raises(ConfigFileError) as e:
        load_run_config(path)
    assert re.search(r'run\.yml:\d+:\d+', str(e.value))


@pytest.mark.parametrize(
    ('text', 'location'),
    [
        ('sweep: {a_max: 0}\n', 'sweep.a_max'),
        ('tolerances: {kernel_tol: -1e-6}\n', 'tolerances.kernel_tol'),
        ('N: 0\n', 'N'),
        ('speed: 3\n', 'speed'),
        ('potential: {family: morse}\n', 'potential'),
    ],
)
def test_invalid_values(write_config, text, location):
    with pytest.raises(ConfigFileError) as e:
        load_run_config(write_config(text))
    assert location in str(e.value)


def test_top_level_must_be_mapping(write_config):
    with pytest.raises(ConfigFileError):
        load_run_config(write_config('- 1\n- 2\n'))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigFileError):
        load_run_config(tmp_path / 'absent.yml')


def test_flags_override_file(write_config):
    config = load_run_config(write_config('N: 10\nseeds: {base_seed: 1}\n'))
    config = apply_overrides(
        config, potential='log_newtonian', N=12, seed=9, m0_angle=1.0, threads=None
    )
    assert config.N == 12
    assert config.seeds.base_seed == 9
    assert config.m0_angle == 1.0
    assert config.threads == 1
    assert config.potential.family == PotentialFamily.LOG_NEWTONIAN
    assert config.potential.D == 0.25


def test_invalid_override():
    with pytest.raises(ConfigFileError):
        apply_overrides(RunConfig(), N=0)


def test_echoed_config_reproduces_run(tmp_path):
    config = apply_overrides(RunConfig(), potential='generalized_morse', seed=4)
    path = dump_run_config(config, tmp_path / 'out')
    assert path.name == 'config.yml'
    assert load_run_config(path) == config
