"""
Kraus-operator channels: validation, application, composition, a standard
library of qubit channels, and Choi-matrix diagnostics.

Channels are square (input dim = output dim).  Kraus lists are never
canonicalized, so two channels are compared as maps on the matrix-unit basis,
never by list equality.
"""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from hopswitch.config import settings
from hopswitch.errors import (
    CPTPViolationError,
    DimensionMismatchError,
    NonUnitaryError,
    ParameterRangeError,
)
from hopswitch.models.specs import ChannelSpec
from hopswitch.quantum.numerics import (
    IDENTITY2,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    ComplexMatrix,
    dagger,
    frozen,
    haar_random_unitary,
    is_unitary,
    matrix_unit,
    max_abs,
    partial_transpose,
    tensor,
)
from hopswitch.quantum.states import DensityMatrix
from hopswitch.utils.serialization import decode_matrix, encode_matrix

logger = logging.getLogger(__name__)


def closure_residual(kraus: Sequence[ComplexMatrix]) -> float:
    """max |(sum_i K_i^dag K_i - I)_{ab}|."""
    dim = kraus[0].shape[0]
    accum = np.zeros((dim, dim), dtype=np.complex128)
    for k in kraus:
        accum += dagger(k) @ k
    return max_abs(accum - np.eye(dim))


class KrausChannel(BaseModel):
    """A CPTP map given by a non-empty list of equal-size square Kraus operators."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kraus: Tuple[np.ndarray, ...]
    name: Optional[str] = None

    @field_validator("kraus", mode="before")
    @classmethod
    def _coerce(cls, value):
        return tuple(frozen(k) for k in value)

    @model_validator(mode="after")
    def _check_invariants(self) -> "KrausChannel":
        if not self.kraus:
            raise ParameterRangeError("a channel needs at least one Kraus operator")
        first = self.kraus[0]
        if first.ndim != 2 or first.shape[0] != first.shape[1] or first.shape[0] == 0:
            raise DimensionMismatchError(f"Kraus operators must be square, got shape {first.shape}")
        for index, k in enumerate(self.kraus):
            if k.shape != first.shape:
                raise DimensionMismatchError(
                    f"Kraus operator {index} has shape {k.shape}, expected {first.shape}"
                )
            if not np.all(np.isfinite(k)):
                raise CPTPViolationError(f"Kraus operator {index} contains NaN or Inf entries")
        residual = closure_residual(self.kraus)
        if residual > settings.CPTP_TOLERANCE:
            raise CPTPViolationError(f"Kraus closure residual {residual:.3e} exceeds {settings.CPTP_TOLERANCE:.0e}")
        return self

    @property
    def dim(self) -> int:
        return self.kraus[0].shape[0]

    @property
    def kraus_count(self) -> int:
        return len(self.kraus)

    def closure_residual(self) -> float:
        return closure_residual(self.kraus)


def make_channel(kraus: Iterable[ComplexMatrix], name: Optional[str] = None) -> KrausChannel:
    """Validate a Kraus list into a KrausChannel."""
    return KrausChannel(kraus=list(kraus), name=name)


def apply_to_operator(ch: KrausChannel, m: ComplexMatrix) -> ComplexMatrix:
    """sum_i K_i m K_i^dag for an arbitrary operator (no state checks)."""
    m = np.asarray(m, dtype=np.complex128)
    if m.shape != (ch.dim, ch.dim):
        raise DimensionMismatchError(f"channel acts on dim {ch.dim}, operator has shape {m.shape}")
    out = np.zeros_like(m)
    for k in ch.kraus:
        out += k @ m @ dagger(k)
    return out


def apply(ch: KrausChannel, rho: DensityMatrix) -> DensityMatrix:
    """Apply the channel to a state; the output is re-validated as a DensityMatrix."""
    if rho.dim != ch.dim:
        raise DimensionMismatchError(f"channel acts on dim {ch.dim}, state has dim {rho.dim}")
    return DensityMatrix(matrix=apply_to_operator(ch, rho.matrix))


def compose(outer: KrausChannel, inner: KrausChannel) -> KrausChannel:
    """outer after inner: Kraus list {O_i I_j}, i-major."""
    if outer.dim != inner.dim:
        raise DimensionMismatchError(f"cannot compose dims {outer.dim} and {inner.dim}")
    name = f"{outer.name}*{inner.name}" if outer.name and inner.name else None
    return make_channel([o @ i for o in outer.kraus for i in inner.kraus], name=name)


def channels_equal(a: KrausChannel, b: KrausChannel, tolerance: float = 1e-10) -> bool:
    """Compare two channels as maps on every matrix unit |i><j|."""
    if a.dim != b.dim:
        return False
    for i in range(a.dim):
        for j in range(a.dim):
            unit = matrix_unit(i, j, a.dim)
            if max_abs(apply_to_operator(a, unit) - apply_to_operator(b, unit)) > tolerance:
                return False
    return True


# ---------------------------------------------------------------------------
# Standard channel library
# ---------------------------------------------------------------------------

def _check_probability(p: float, label: str = "p") -> float:
    if not 0.0 <= p <= 1.0:
        raise ParameterRangeError(f"{label} must lie in [0, 1], got {p}")
    return float(p)


def identity_channel(dim: int = 2) -> KrausChannel:
    return make_channel([np.eye(dim)], name="identity")


def unitary_channel(u: ComplexMatrix, name: Optional[str] = None) -> KrausChannel:
    u = np.asarray(u, dtype=np.complex128)
    if not is_unitary(u, settings.UNITARY_TOLERANCE):
        raise NonUnitaryError("unitary_channel needs a unitary matrix")
    return make_channel([u], name=name or "unitary")


def depolarizing(p: float) -> KrausChannel:
    """rho -> (1 - p) rho + p I/2, with Kraus sqrt(1 - 3p/4) I and sqrt(p/4) {X, Y, Z}."""
    p = _check_probability(p)
    k0 = np.sqrt(max(0.0, 1.0 - 3.0 * p / 4.0))
    k = np.sqrt(p / 4.0)
    return make_channel([k0 * IDENTITY2, k * PAULI_X, k * PAULI_Y, k * PAULI_Z], name=f"depolarizing({p:g})")


def dephasing(p: float) -> KrausChannel:
    """Phase flip: rho -> (1 - p) rho + p Z rho Z."""
    p = _check_probability(p)
    return make_channel([np.sqrt(1.0 - p) * IDENTITY2, np.sqrt(p) * PAULI_Z], name=f"dephasing({p:g})")


def bit_flip(p: float) -> KrausChannel:
    p = _check_probability(p)
    return make_channel([np.sqrt(1.0 - p) * IDENTITY2, np.sqrt(p) * PAULI_X], name=f"bit_flip({p:g})")


def amplitude_damping(gamma: float) -> KrausChannel:
    gamma = _check_probability(gamma, "gamma")
    k0 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - gamma)]], dtype=np.complex128)
    k1 = np.array([[0.0, np.sqrt(gamma)], [0.0, 0.0]], dtype=np.complex128)
    return make_channel([k0, k1], name=f"amplitude_damping({gamma:g})")


def eb_xz() -> KrausChannel:
    """rho -> (X rho X + Z rho Z) / 2, an entanglement-breaking qubit channel."""
    return make_channel([PAULI_X / np.sqrt(2.0), PAULI_Z / np.sqrt(2.0)], name="eb_xz")


def random_channel(dim: int, n_kraus: int, seed: int) -> KrausChannel:
    """Kraus operators are the dim x dim blocks of a Haar isometry C^dim -> C^(dim n)."""
    if n_kraus < 1:
        raise ParameterRangeError(f"n_kraus must be >= 1, got {n_kraus}")
    isometry = haar_random_unitary(dim * n_kraus, seed)[:, :dim]
    blocks = [isometry[k * dim:(k + 1) * dim, :] for k in range(n_kraus)]
    return make_channel(blocks, name=f"random({dim},{n_kraus},{seed})")


def standard_library() -> List[KrausChannel]:
    """Every named qubit channel over a small parameter grid."""
    library = [identity_channel(2), eb_xz()]
    for u in (PAULI_X, PAULI_Y, PAULI_Z):
        library.append(unitary_channel(u))
    for p in (0.0, 0.25, 0.5, 0.75, 1.0):
        library.extend([depolarizing(p), dephasing(p), bit_flip(p), amplitude_damping(p)])
    return library


# ---------------------------------------------------------------------------
# Choi diagnostics
# ---------------------------------------------------------------------------

def choi(ch: KrausChannel) -> ComplexMatrix:
    """sum_ij |i><j| (x) ch(|i><j|): input factor first, output second."""
    d = ch.dim
    out = np.zeros((d * d, d * d), dtype=np.complex128)
    for i in range(d):
        for j in range(d):
            unit = matrix_unit(i, j, d)
            out += tensor(unit, apply_to_operator(ch, unit))
    return out


def is_entanglement_breaking(ch: KrausChannel) -> Optional[bool]:
    """PPT test on the Choi matrix; decisive for qubits only.

    Returns None (undecided) for dim > 2, where PPT no longer implies separability.
    """
    if ch.dim > 2:
        logger.warning("Entanglement-breaking test undecided for dim=%d (PPT is only decisive for qubits)", ch.dim)
        return None
    pt = partial_transpose(choi(ch), ch.dim, ch.dim, target="second")
    smallest = float(np.min(np.linalg.eigvalsh(0.5 * (pt + dagger(pt)))))
    logger.debug("Choi partial transpose min eigenvalue for %s: %.3e", ch.name, smallest)
    return smallest >= -settings.STATE_TOLERANCE


# ---------------------------------------------------------------------------
# Spec-file codec
# ---------------------------------------------------------------------------

def channel_from_spec(spec: ChannelSpec) -> KrausChannel:
    return make_channel([decode_matrix(op) for op in spec.kraus], name=spec.name)


def channel_to_spec(ch: KrausChannel) -> ChannelSpec:
    return ChannelSpec(name=ch.name, dim=ch.dim, kraus=[encode_matrix(k) for k in ch.kraus])
