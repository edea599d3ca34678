from pydantic_settings import BaseSettings, SettingsConfigDict


class LinalgConfig(BaseSettings):
    model_config = SettingsConfigDict(env_prefix='LINALG_')

    SYMMETRY_TOL: float = 1e-12
    JACOBI_TOL: float = 1e-12
    JACOBI_MAX_SWEEPS: int = 100
    QR_ITERATIONS_PER_EIGENVALUE: int = 30
    KERNEL_TOL: float = 1e-6


linalg_config = LinalgConfig()
