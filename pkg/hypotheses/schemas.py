import math

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat

from common.schemas import FailureReason
from hypotheses.config import hypotheses_config


class Tolerances(BaseModel):
    model_config = ConfigDict(frozen=True)

    h1_tol: PositiveFloat = Field(default_factory=lambda: hypotheses_config.H1_TOL)
    kernel_tol: PositiveFloat = Field(
        default_factory=lambda: hypotheses_config.KERNEL_TOL
    )
    span_tol: PositiveFloat = Field(default_factory=lambda: hypotheses_config.SPAN_TOL)
    h4_tol: PositiveFloat = Field(default_factory=lambda: hypotheses_config.H4_TOL)
    h5_tol: PositiveFloat = Field(default_factory=lambda: hypotheses_config.H5_TOL)
    eigenvalue_match_tol: PositiveFloat = Field(
        default_factory=lambda: hypotheses_config.EIGENVALUE_MATCH_TOL
    )


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    reason: FailureReason = FailureReason.SUCCESS

    @property
    def passed(self) -> bool:
        return self.reason == FailureReason.SUCCESS


class StationarityResult(CheckResult):
    residual: float


class KernelResult(CheckResult):
    kernel_dim: int
    span_residual: float
    mu4: float
    abs_mu3: float

    @property
    def gap(self) -> float:
        if self.abs_mu3 == 0:
            return math.inf
        return abs(self.mu4) / self.abs_mu3


class CollinearityResult(CheckResult):
    line_deviation: float


class OverlapResult(CheckResult):
    min_overlap: float
    offending_eigenvalue: float | None = None


class Lemma4Result(CheckResult):
    kernel_dim: int
    kernel_residual: float
    max_nonzero_re: float
    has_minus_two_alpha: bool


class HypothesisReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    N: int
    D: float
    m0_angle: float
    h1_residual: float
    h2_kernel_dim: int
    h2_span_check: float
    h3_mu4: float
    h3_abs_mu3: float
    gap: float
    h4_line_deviation: float
    h5_min_overlap: float
    h5_offending_eigenvalue: float | None
    lemma3_no_genvec: bool
    lemma4_kernel_dim: int
    lemma4_max_nonzero_re: float
    lemma4_kernel_residual: float
    full_F_has_minus_two_alpha: bool
    quadratic_residual: float
    failures: list[FailureReason]
    tolerances: Tolerances

    @property
    def passed(self) -> bool:
        return not self.failures
