import logging
from pathlib import Path

import yaml
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PositiveFloat,
    PositiveInt,
    ValidationError,
)
from pydantic_settings import BaseSettings, SettingsConfigDict

from common.exceptions import ConfigFileError
from dynamics.config import integrator_config
from dynamics.schemas import ModelParams
from experiments.config import experiments_config
from experiments.schemas import NormalizeMode
from hypotheses.config import hypotheses_config
from hypotheses.schemas import Tolerances
from potentials.schemas import PotentialFamily, PotentialSpec, reference_potentials

logger = logging.getLogger(__name__)

CONFIG_ECHO_NAME = 'config.yml'


class CliConfig(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix='FLOCK_', env_file='.env', extra='ignore'
    )

    OUT_DIR: str = 'out'
    LOG_LEVEL: str = 'INFO'


cli_config = CliConfig()


class SectionModel(BaseModel):
    model_config = ConfigDict(extra='forbid')


class IntegratorSettings(SectionModel):
    dt: PositiveFloat = integrator_config.SWEEP_DT
    T: PositiveFloat = experiments_config.HORIZON


class SeedSettings(SectionModel):
    base_seed: int = 0


class ToleranceSettings(SectionModel):
    h1_tol: PositiveFloat = hypotheses_config.H1_TOL
    kernel_tol: PositiveFloat = hypotheses_config.KERNEL_TOL
    h5_tol: PositiveFloat = hypotheses_config.H5_TOL

    def as_tolerances(self) -> Tolerances:
        return Tolerances(
            h1_tol=self.h1_tol, kernel_tol=self.kernel_tol, h5_tol=self.h5_tol
        )


class SweepSettings(SectionModel):
    n_sims: PositiveInt = experiments_config.N_SIMS
    a_max: PositiveFloat = experiments_config.A_MAX
    n_bins: PositiveInt = experiments_config.N_BINS


class OutputSettings(SectionModel):
    dump_matrices: bool = False
    trajectory_every: PositiveInt | None = None


class Table1Settings(SectionModel):
    refine_D: PositiveFloat = experiments_config.REFINE_D
    refine_T: PositiveFloat = experiments_config.REFINE_T
    refine_dt: PositiveFloat = integrator_config.REFINE_DT
    normalize: NormalizeMode = NormalizeMode.NORMALIZE
    potentials: list[PotentialFamily] = Field(
        default_factory=lambda: list(PotentialFamily)
    )
    N_values: list[PositiveInt] = Field(default_factory=lambda: [25, 40])


def _default_potential() -> PotentialSpec:
    return reference_potentials()[PotentialFamily.MORSE]


class RunConfig(SectionModel):
    potential: PotentialSpec = Field(default_factory=_default_potential)
    N: PositiveInt = 25
    model: ModelParams = Field(default_factory=ModelParams)
    m0_angle: float = hypotheses_config.M0_ANGLE
    threads: PositiveInt = 1
    integrator: IntegratorSettings = Field(default_factory=IntegratorSettings)
    seeds: SeedSettings = Field(default_factory=SeedSettings)
    tolerances: ToleranceSettings = Field(default_factory=ToleranceSettings)
    sweep: SweepSettings = Field(default_factory=SweepSettings)
    table1: Table1Settings = Field(default_factory=Table1Settings)
    output: OutputSettings = Field(default_factory=OutputSettings)


def _format_validation_error(source: str, error: ValidationError) -> str:
    lines = [f'{source}: invalid run configuration']
    for item in error.errors():
        location = '.'.join(str(part) for part in item['loc'])
        lines.append(f'  {location}: {item["msg"]}')
    return '\n'.join(lines)


def load_run_config(path: str | Path) -> RunConfig:
    wrapped_path = Path(path)
    try:
        with wrapped_path.open(encoding='utf-8') as f:
            data = yaml.safe_load(f)
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark
        where = str(wrapped_path)
        if mark is not None:
            where += f':{mark.line + 1}:{mark.column + 1}'
        raise ConfigFileError(f'{where}: {e.problem}') from e
    except (yaml.YAMLError, OSError) as e:
        raise ConfigFileError(f'{wrapped_path}: {e}') from e

    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigFileError(f'{wrapped_path}: expected a mapping at the top level')
    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigFileError(_format_validation_error(str(wrapped_path), e)) from e


def apply_overrides(config: RunConfig, **overrides) -> RunConfig:
    data = config.model_dump(mode='json')
    if overrides.get('potential') is not None:
        family = PotentialFamily(overrides['potential'])
        data['potential'] = reference_potentials()[family].model_dump(mode='json')
    for key in ('N', 'threads', 'm0_angle'):
        if overrides.get(key) is not None:
            data[key] = overrides[key]
    if overrides.get('seed') is not None:
        data['seeds']['base_seed'] = overrides['seed']
    for key in ('dump_matrices', 'trajectory_every'):
        if overrides.get(key) is not None:
            data['output'][key] = overrides[key]
    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigFileError(_format_validation_error('command line', e)) from e


def dump_run_config(config: RunConfig, out_dir: str | Path) -> Path:
    path = Path(out_dir) / CONFIG_ECHO_NAME
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open('w', encoding='utf-8') as f:
        yaml.safe_dump(config.model_dump(mode='json'), f, sort_keys=False)
    return path
