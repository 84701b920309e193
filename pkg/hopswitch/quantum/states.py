"""
Validated density matrices plus the state generators used by tests and sweeps.

A DensityMatrix is immutable: its array is a read-only copy made at
construction time, and every instance has passed the Hermitian / PSD /
unit-trace checks at STATE_TOLERANCE.
"""

import logging
from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from hopswitch.config import settings
from hopswitch.errors import InvalidStateError, NormalizationError, ParameterRangeError
from hopswitch.quantum.numerics import (
    ComplexMatrix,
    dagger,
    frozen,
    ginibre_matrix,
    ket,
    max_abs,
    projector,
)

logger = logging.getLogger(__name__)


def validate_density(m: ComplexMatrix, tolerance: float) -> None:
    """Raise InvalidStateError unless `m` is a density matrix within `tolerance`."""
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise InvalidStateError(f"density matrix must be square and non-empty, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidStateError("density matrix contains NaN or Inf entries")
    hermiticity = max_abs(m - dagger(m))
    if hermiticity > tolerance:
        raise InvalidStateError(f"matrix is not Hermitian (max |m - m^dag| = {hermiticity:.3e})")
    trace = np.trace(m)
    if abs(trace - 1.0) > tolerance:
        raise InvalidStateError(f"trace must be 1, got {trace.real:.12g}")
    smallest = float(np.min(np.linalg.eigvalsh(0.5 * (m + dagger(m)))))
    if smallest < -tolerance:
        raise InvalidStateError(f"matrix is not positive semidefinite (min eigenvalue {smallest:.3e})")


class DensityMatrix(BaseModel):
    """Hermitian, PSD, unit-trace complex matrix."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: np.ndarray

    @field_validator("matrix", mode="before")
    @classmethod
    def _coerce(cls, value):
        return frozen(value)

    @model_validator(mode="after")
    def _check_invariants(self) -> "DensityMatrix":
        validate_density(self.matrix, settings.STATE_TOLERANCE)
        return self

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def from_vector(cls, vector) -> "DensityMatrix":
        """Pure state |v><v|; `vector` must have unit norm."""
        v = np.asarray(vector, dtype=np.complex128).ravel()
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) > settings.STATE_TOLERANCE:
            raise NormalizationError(f"state vector norm is {norm:.12g}, expected 1")
        return cls(matrix=projector(v))

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityMatrix":
        return cls(matrix=np.eye(dim, dtype=np.complex128) / dim)

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))


def named_state(name: str, dim: int = 2) -> DensityMatrix:
    """zero, one, plus, minus, mixed; plus/minus use the first two basis states."""
    name = name.lower()
    if name == "mixed":
        return DensityMatrix.maximally_mixed(dim)
    if dim < 2 and name != "zero":
        raise ParameterRangeError(f"state {name!r} needs dimension >= 2")
    if name == "zero":
        return DensityMatrix.from_vector(ket(0, dim))
    if name == "one":
        return DensityMatrix.from_vector(ket(1, dim))
    if name in ("plus", "minus"):
        sign = 1.0 if name == "plus" else -1.0
        return DensityMatrix.from_vector((ket(0, dim) + sign * ket(1, dim)) / np.sqrt(2.0))
    raise ParameterRangeError(f"unknown state name {name!r} (zero | one | plus | minus | mixed)")


def random_density_matrix(dim: int, seed: int) -> DensityMatrix:
    """Full-rank mixed state from the Ginibre ensemble: G G^dag / tr(G G^dag)."""
    rng = np.random.default_rng(seed)
    g = ginibre_matrix(dim, dim, rng)
    rho = g @ dagger(g)
    rho = 0.5 * (rho + dagger(rho))
    return DensityMatrix(matrix=rho / np.trace(rho).real)


def random_pure_state(dim: int, seed: int) -> DensityMatrix:
    rng = np.random.default_rng(seed)
    v = ginibre_matrix(dim, 1, rng).ravel()
    return DensityMatrix.from_vector(v / np.linalg.norm(v))


def probe_states(dim: int) -> List[DensityMatrix]:
    """d^2 pure states whose projectors span all dim x dim matrices.

    |i>, (|i> + |j>)/sqrt2 and (|i> + i|j>)/sqrt2 for i < j.  Two linear maps
    agreeing on all of them agree everywhere.
    """
    probes = [DensityMatrix.from_vector(ket(i, dim)) for i in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            probes.append(DensityMatrix.from_vector((ket(i, dim) + ket(j, dim)) / np.sqrt(2.0)))
            probes.append(DensityMatrix.from_vector((ket(i, dim) + 1j * ket(j, dim)) / np.sqrt(2.0)))
    return probes
