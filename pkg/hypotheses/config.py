from pydantic_settings import BaseSettings, SettingsConfigDict


class HypothesesConfig(BaseSettings):
    model_config = SettingsConfigDict(env_prefix='HYPOTHESES_')

    H1_TOL: float = 1e-8
    KERNEL_TOL: float = 1e-6
    SPAN_TOL: float = 1e-5
    H4_TOL: float = 1e-6
    H5_TOL: float = 1e-8
    EIGENVALUE_MATCH_TOL: float = 1e-6
    QUADRATIC_PAIRS: int = 6
    M0_ANGLE: float = 0.3


hypotheses_config = HypothesesConfig()
