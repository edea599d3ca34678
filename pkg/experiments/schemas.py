import math
from enum import StrEnum, auto
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from potentials.schemas import PotentialSpec


class SweepRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    seed: int
    a: float = Field(ge=0)
    pert_l2_per_particle: float
    pol_initial: float = Field(ge=0, le=1 + 1e-12)
    pol_min: float = Field(ge=0, le=1 + 1e-12)
    diverged: bool = False
    final_speed: float = math.nan


class SweepBin(BaseModel):
    model_config = ConfigDict(frozen=True)

    bin_lo: float
    bin_hi: float
    count: int
    mean: float
    q05: float
    q95: float


class SweepStats(BaseModel):
    model_config = ConfigDict(frozen=True)

    pol_min: list[SweepBin]
    pert: list[SweepBin]

    @model_validator(mode='after')
    def check_bins(self) -> Self:
        if len(self.pol_min) != len(self.pert):
            raise ValueError('both statistics must use the same bins')
        return self

    @property
    def edges(self) -> list[float]:
        return [b.bin_lo for b in self.pol_min] + [self.pol_min[-1].bin_hi]

    @property
    def counts(self) -> list[int]:
        return [b.count for b in self.pol_min]


class NormalizeMode(StrEnum):
    NORMALIZE = auto()
    FIXED = auto()


class Table1Row(BaseModel):
    model_config = ConfigDict(frozen=True)

    potential: str
    params: str
    N: int
    mu4: float
    abs_mu3: float
    D: float
    kernel_dim: int
    gap: float

    @classmethod
    def describe(cls, spec: PotentialSpec) -> str:
        values = spec.model_dump(exclude={'family', 'D'}, exclude_none=True)
        return ' '.join(f'{key}={value:.6g}' for key, value in values.items())
