from enum import StrEnum, auto
from typing import Self

from pydantic import BaseModel, ConfigDict, model_validator


class PotentialFamily(StrEnum):
    MORSE = auto()
    QUASI_MORSE = auto()
    GENERALIZED_MORSE = auto()
    LOG_NEWTONIAN = auto()


MORSE_TYPE_FAMILIES = (
    PotentialFamily.MORSE,
    PotentialFamily.QUASI_MORSE,
    PotentialFamily.GENERALIZED_MORSE,
)


class PotentialSpec(BaseModel):
    """Radial interaction potential W_D(r) = D * W(r).

    Morse-type families use W(r) = V(r) - C V(r / ell); `k` is read only by
    the quasi-Morse family and `p` only by the generalized Morse family.
    """

    model_config = ConfigDict(frozen=True)

    family: PotentialFamily
    C: float | None = None
    ell: float | None = None
    k: float | None = None
    p: float | None = None
    D: float = 1.0

    @model_validator(mode='after')
    def check_parameters(self) -> Self:
        if self.D <= 0:
            raise ValueError('scaling D must be positive')
        if self.family in MORSE_TYPE_FAMILIES:
            if self.C is None or self.C <= 0:
                raise ValueError(f'{self.family} needs C > 0')
            if self.ell is None or self.ell <= 0:
                raise ValueError(f'{self.family} needs ell > 0')
        if self.family == PotentialFamily.QUASI_MORSE and (
            self.k is None or self.k <= 0
        ):
            raise ValueError('quasi_morse needs k > 0')
        if self.family == PotentialFamily.GENERALIZED_MORSE and (
            self.p is None or self.p <= 0
        ):
            raise ValueError('generalized_morse needs p > 0')
        return self

    def scaled(self, D: float) -> PotentialSpec:
        return self.model_copy(update={'D': D})


def reference_potentials() -> dict[PotentialFamily, PotentialSpec]:
    return {
        PotentialFamily.MORSE: PotentialSpec(
            family=PotentialFamily.MORSE, C=10 / 9, ell=0.75
        ),
        PotentialFamily.QUASI_MORSE: PotentialSpec(
            family=PotentialFamily.QUASI_MORSE, C=10 / 9, ell=0.75, k=0.5
        ),
        PotentialFamily.GENERALIZED_MORSE: PotentialSpec(
            family=PotentialFamily.GENERALIZED_MORSE, C=10 / 9, ell=0.75, p=1.25
        ),
        PotentialFamily.LOG_NEWTONIAN: PotentialSpec(
            family=PotentialFamily.LOG_NEWTONIAN, D=0.25
        ),
    }
