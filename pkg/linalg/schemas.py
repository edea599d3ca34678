import numpy as np
from numpy.typing import NDArray
from pydantic import (
    BaseModel,
    ConfigDict,
    computed_field,
    field_serializer,
    field_validator,
)

from common.schemas import Matrix

type ComplexVector = NDArray[np.complex128]


def eigenvalue_order(eigenvalues: ComplexVector) -> NDArray[np.intp]:
    """Descending real part, ties broken by descending imaginary part."""
    return np.lexsort((-eigenvalues.imag, -eigenvalues.real))


class Spectrum(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    eigenvalues: ComplexVector
    eigenvectors: Matrix | None = None
    kernel_tol: float

    @field_validator('eigenvalues', mode='before')
    @classmethod
    def validate_eigenvalues(cls, value) -> ComplexVector:
        array = np.asarray(value)
        if array.ndim == 2 and array.shape[1] == 2 and not np.iscomplexobj(array):
            array = array[:, 0] + 1j * array[:, 1]
        return np.asarray(array, dtype=np.complex128).ravel()

    @classmethod
    def from_eigenvalues(
        cls,
        eigenvalues: ComplexVector,
        kernel_tol: float,
        eigenvectors: Matrix | None = None,
    ) -> Spectrum:
        values = np.asarray(eigenvalues, dtype=np.complex128)
        order = eigenvalue_order(values)
        return cls(
            eigenvalues=values[order],
            eigenvectors=None if eigenvectors is None else eigenvectors[:, order],
            kernel_tol=kernel_tol,
        )

    @property
    def spectral_radius(self) -> float:
        return float(np.abs(self.eigenvalues).max(initial=0.0))

    @property
    def kernel_mask(self) -> NDArray[np.bool_]:
        # a zero matrix has radius 0; fall back to an absolute threshold then
        scale = self.spectral_radius or 1.0
        return np.abs(self.eigenvalues) < self.kernel_tol * scale

    @computed_field
    @property
    def kernel_dim(self) -> int:
        return int(self.kernel_mask.sum())

    @property
    def real(self) -> NDArray[np.float64]:
        return self.eigenvalues.real

    def scaled(self, c: float) -> Spectrum:
        return Spectrum.from_eigenvalues(
            c * self.eigenvalues, self.kernel_tol, self.eigenvectors
        )

    @field_serializer('eigenvalues')
    def serialize_eigenvalues(self, eigenvalues: ComplexVector) -> list[list[float]]:
        return [[float(value.real), float(value.imag)] for value in eigenvalues]

    @field_serializer('eigenvectors')
    def serialize_eigenvectors(self, eigenvectors: Matrix | None) -> list | None:
        return None if eigenvectors is None else eigenvectors.tolist()
