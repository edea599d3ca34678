from pydantic import BaseModel, ConfigDict, Field

from jacobians.schemas import StationaryConfig
from linalg.schemas import Spectrum


class ConsoleTemplate(BaseModel):
    template: str


class SteadyStatePayload(BaseModel):
    model_config = ConfigDict(frozen=True)

    config: StationaryConfig
    seed: int


class SteadyStateFile(BaseModel):
    model_config = ConfigDict(frozen=True)

    payload: SteadyStatePayload
    sha256: str = Field(pattern=r'^[0-9a-f]{64}$')


class SpectrumOutput(BaseModel):
    model_config = ConfigDict(frozen=True)

    N: int
    D: float
    m0_angle: float
    G: Spectrum
    FBB: Spectrum
