from pydantic_settings import BaseSettings, SettingsConfigDict


class IntegratorConfig(BaseSettings):
    model_config = SettingsConfigDict(env_prefix='INTEGRATOR_')

    SWEEP_DT: float = 1e-2
    REFINE_DT: float = 2e-2
    CONSISTENCY_TOL: float = 1e-10


integrator_config = IntegratorConfig()
