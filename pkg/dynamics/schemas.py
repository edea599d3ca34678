import math
from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from common.schemas import Vector
from dynamics.config import integrator_config


class ArrayModel(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @staticmethod
    def as_finite_vector(value: Vector) -> Vector:
        array = np.array(value, dtype=np.float64).ravel()
        if not np.all(np.isfinite(array)):
            raise ValueError('state vectors must be finite')
        array.setflags(write=False)
        return array


class ModelParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    alpha: float = 1.0
    beta: float = 5.0

    @model_validator(mode='after')
    def check_positive(self) -> Self:
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError('alpha and beta must be positive')
        return self

    @property
    def speed(self) -> float:
        return math.sqrt(self.alpha / self.beta)


class ParticleState(ArrayModel):
    x: Vector
    v: Vector

    @field_validator('x', 'v', mode='before')
    @classmethod
    def validate_vector(cls, value: Vector) -> Vector:
        return cls.as_finite_vector(value)

    @model_validator(mode='after')
    def check_layout(self) -> Self:
        if self.x.size % 2 or self.x.size == 0 or self.x.shape != self.v.shape:
            raise ValueError('x and v must be equal-length 2N vectors')
        return self

    @property
    def N(self) -> int:
        return self.x.size // 2

    def packed(self) -> Vector:
        return np.concatenate([self.x, self.v])

    @classmethod
    def unpack(cls, y: Vector) -> ParticleState:
        half = len(y) // 2
        return cls(x=y[:half], v=y[half:])


class MeanVelState(ArrayModel):
    """Mean-velocity frame (x~, v~, m); v~ sums to zero particle-wise."""

    x: Vector
    v: Vector
    m: Vector

    @field_validator('x', 'v', 'm', mode='before')
    @classmethod
    def validate_vector(cls, value: Vector) -> Vector:
        return cls.as_finite_vector(value)

    @model_validator(mode='after')
    def check_consistency(self) -> Self:
        if self.x.size % 2 or self.x.shape != self.v.shape or self.m.size != 2:
            raise ValueError('x~, v~ must be 2N vectors and m a 2-vector')
        drift = np.abs(self.v.reshape(-1, 2).mean(axis=0)).max()
        # relative to the velocity scale once speeds exceed one
        scale = max(1.0, np.abs(self.v).max(initial=0.0), np.abs(self.m).max())
        if drift > integrator_config.CONSISTENCY_TOL * scale:
            raise ValueError(f'v~ is not mean-velocity consistent (mean {drift:.3e})')
        return self

    @property
    def N(self) -> int:
        return self.x.size // 2

    def packed(self) -> Vector:
        return np.concatenate([self.x, self.v, self.m])

    @classmethod
    def unpack(cls, y: Vector) -> MeanVelState:
        n = (len(y) - 2) // 2
        return cls(x=y[:n], v=y[n : 2 * n], m=y[2 * n :])
