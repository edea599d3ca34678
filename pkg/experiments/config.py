from pydantic_settings import BaseSettings, SettingsConfigDict


class ExperimentsConfig(BaseSettings):
    model_config = SettingsConfigDict(env_prefix='EXPERIMENTS_')

    INIT_DISC_RADIUS: float = 2.0
    REFINE_D: float = 1.0
    REFINE_T: float = 500.0
    NEWTON_STEPS: int = 50
    NEWTON_TOL: float = 1e-13
    N_SIMS: int = 500
    A_MAX: float = 2.0
    N_BINS: int = 20
    HORIZON: float = 100.0


experiments_config = ExperimentsConfig()
