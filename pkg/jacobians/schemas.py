from typing import Self

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    field_serializer,
    field_validator,
    model_validator,
)

from common.schemas import Vector
from dynamics.rhs import aggregation_rhs
from potentials.schemas import PotentialSpec


class StationaryConfig(BaseModel):
    """Candidate stationary state of the aggregation system.

    `residual` is the sup-norm of the aggregation field at `x`. When a
    `tolerance` is recorded, construction fails unless the residual is below it.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    x: Vector
    spec: PotentialSpec
    residual: float
    tolerance: float | None = None

    @field_validator('x', mode='before')
    @classmethod
    def validate_positions(cls, value: Vector) -> Vector:
        array = np.array(value, dtype=np.float64).ravel()
        if array.size == 0 or array.size % 2 or not np.all(np.isfinite(array)):
            raise ValueError('positions must be a finite 2N vector')
        points = array.reshape(-1, 2)
        if len(np.unique(points, axis=0)) < len(points):
            raise ValueError('stationary states have no coincident particles')
        array.setflags(write=False)
        return array

    @field_serializer('x')
    def serialize_positions(self, x: Vector) -> list[float]:
        return x.tolist()

    @model_validator(mode='after')
    def check_residual(self) -> Self:
        if self.tolerance is not None and not self.residual < self.tolerance:
            raise ValueError(
                f'residual {self.residual:.3e} is not below {self.tolerance:.3e}'
            )
        return self

    @classmethod
    def from_positions(
        cls, spec: PotentialSpec, x: Vector, tolerance: float | None = None
    ) -> StationaryConfig:
        residual = float(np.abs(aggregation_rhs(spec, x)).max())
        return cls(x=x, spec=spec, residual=residual, tolerance=tolerance)

    @property
    def N(self) -> int:
        return self.x.size // 2

    def scaled(self, D: float) -> StationaryConfig:
        return StationaryConfig(
            x=self.x,
            spec=self.spec.scaled(D),
            residual=self.residual * D / self.spec.D,
        )


class FlockFamilyMember(BaseModel):
    """Stationary profile travelling with mean velocity m0.

    |m0| = sqrt(alpha / beta) is checked against the model parameters when a
    Jacobian is assembled.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    config: StationaryConfig
    m0: Vector

    @field_validator('m0', mode='before')
    @classmethod
    def validate_velocity(cls, value: Vector) -> Vector:
        array = np.array(value, dtype=np.float64).ravel()
        if array.shape != (2,) or not np.all(np.isfinite(array)):
            raise ValueError('m0 must be a finite 2-vector')
        array.setflags(write=False)
        return array

    @property
    def m0_perp(self) -> Vector:
        return np.array([-self.m0[1], self.m0[0]])
