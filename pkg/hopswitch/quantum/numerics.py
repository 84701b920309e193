"""
Dense complex-matrix primitives every other module builds on.

Tensor convention: the first factor is the slow index, i.e. entry
(i_a * b.rows + i_b, j_a * b.cols + j_b) of tensor(a, b) is a[i_a, j_a] * b[i_b, j_b].
This is exactly numpy's kron, and every module (carrier first, control second)
relies on it.

Haar-random unitaries come from scipy.stats.unitary_group, which draws a
complex Ginibre matrix, QR-decomposes it and fixes the phases of R's diagonal
(Mezzadri's construction).  Seeding goes through numpy's default_rng so a given
seed always yields the same matrix.
"""

import logging
from typing import Literal, Union

import numpy as np
import scipy.linalg
from numpy.typing import NDArray
from scipy.stats import unitary_group

from hopswitch.errors import DimensionMismatchError, ParameterRangeError

logger = logging.getLogger(__name__)

ComplexMatrix = NDArray[np.complex128]

IDENTITY2: ComplexMatrix = np.eye(2, dtype=np.complex128)
PAULI_X: ComplexMatrix = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y: ComplexMatrix = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z: ComplexMatrix = np.array([[1, 0], [0, -1]], dtype=np.complex128)
HADAMARD: ComplexMatrix = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2.0)

for _const in (IDENTITY2, PAULI_X, PAULI_Y, PAULI_Z, HADAMARD):
    _const.setflags(write=False)

PAULIS = {"I": IDENTITY2, "X": PAULI_X, "Y": PAULI_Y, "Z": PAULI_Z}


def as_matrix(value) -> ComplexMatrix:
    """Accept a raw array or any value object exposing `.matrix`."""
    return np.asarray(getattr(value, "matrix", value), dtype=np.complex128)


def frozen(m) -> ComplexMatrix:
    """Return a read-only complex128 copy of `m`."""
    out = np.array(m, dtype=np.complex128)
    out.setflags(write=False)
    return out


def dagger(m: ComplexMatrix) -> ComplexMatrix:
    return np.conj(np.asarray(m)).T


def ket(index: int, dim: int) -> NDArray[np.complex128]:
    v = np.zeros(dim, dtype=np.complex128)
    v[index] = 1.0
    return v


def projector(v) -> ComplexMatrix:
    v = np.asarray(v, dtype=np.complex128).ravel()
    return np.outer(v, np.conj(v))


def matrix_unit(i: int, j: int, dim: int) -> ComplexMatrix:
    """|i><j| in dimension `dim`."""
    m = np.zeros((dim, dim), dtype=np.complex128)
    m[i, j] = 1.0
    return m


def is_unitary(m: ComplexMatrix, tolerance: float = 1e-12) -> bool:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    residual = dagger(m) @ m - np.eye(m.shape[0])
    return bool(np.max(np.abs(residual), initial=0.0) <= tolerance)


def tensor(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Kronecker product, first factor slow."""
    return np.kron(as_matrix(a), as_matrix(b))


def _check_bipartite(m: ComplexMatrix, dim_a: int, dim_b: int) -> None:
    expected = dim_a * dim_b
    if m.ndim != 2 or m.shape != (expected, expected):
        raise DimensionMismatchError(
            f"expected a {expected}x{expected} matrix for dims ({dim_a}, {dim_b}), got {m.shape}"
        )


def partial_trace(
    m: ComplexMatrix,
    dim_a: int,
    dim_b: int,
    keep: Literal["first", "second"] = "first",
) -> ComplexMatrix:
    """Trace out one factor of a bipartite operator under the tensor convention above."""
    m = as_matrix(m)
    _check_bipartite(m, dim_a, dim_b)
    blocks = m.reshape(dim_a, dim_b, dim_a, dim_b)
    if keep == "first":
        return np.einsum("ikjk->ij", blocks)
    if keep == "second":
        return np.einsum("kikj->ij", blocks)
    raise ParameterRangeError(f"keep must be 'first' or 'second', got {keep!r}")


def partial_transpose(
    m: ComplexMatrix,
    dim_a: int,
    dim_b: int,
    target: Literal["first", "second"] = "second",
) -> ComplexMatrix:
    """Transpose one tensor factor in place of the other."""
    m = as_matrix(m)
    _check_bipartite(m, dim_a, dim_b)
    blocks = m.reshape(dim_a, dim_b, dim_a, dim_b)
    if target == "second":
        swapped = blocks.transpose(0, 3, 2, 1)
    elif target == "first":
        swapped = blocks.transpose(2, 1, 0, 3)
    else:
        raise ParameterRangeError(f"target must be 'first' or 'second', got {target!r}")
    return swapped.reshape(dim_a * dim_b, dim_a * dim_b)


def trace_distance(a, b) -> float:
    """Half the trace norm of a - b, via a Hermitian eigensolver."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"cannot compare states of shape {a.shape} and {b.shape}")
    diff = a - b
    # Symmetrize so eigvalsh sees an exactly Hermitian input
    diff = 0.5 * (diff + dagger(diff))
    eigenvalues = np.linalg.eigvalsh(diff)
    return float(min(1.0, 0.5 * np.sum(np.abs(eigenvalues))))


def psd_sqrt(m: ComplexMatrix) -> ComplexMatrix:
    """Square root of a Hermitian PSD matrix; tiny negative eigenvalues are clipped to 0."""
    m = as_matrix(m)
    eigenvalues, vectors = scipy.linalg.eigh(0.5 * (m + dagger(m)))
    return (vectors * np.sqrt(np.clip(eigenvalues, 0.0, None))) @ dagger(vectors)


def fidelity(a, b) -> float:
    """Uhlmann fidelity ||sqrt(a) sqrt(b)||_1^2, clipped to [0, 1].

    Square roots go through eigh: joint states are often rank-deficient, where
    the Schur-based sqrtm is ill-conditioned.
    """
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"cannot compare states of shape {a.shape} and {b.shape}")
    singular_values = scipy.linalg.svdvals(psd_sqrt(a) @ psd_sqrt(b))
    value = float(np.sum(singular_values)) ** 2
    return min(1.0, max(0.0, value))


def haar_random_unitary(dim: int, seed: int) -> ComplexMatrix:
    """Haar-distributed dim x dim unitary; identical output for identical seeds."""
    if dim < 1:
        raise ParameterRangeError(f"unitary dimension must be >= 1, got {dim}")
    rng = np.random.default_rng(seed)
    if dim == 1:
        # unitary_group only accepts dim > 1; U(1) is a uniform phase
        return frozen([[np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))]])
    u = unitary_group.rvs(dim, random_state=rng)
    return frozen(np.asarray(u, dtype=np.complex128).reshape(dim, dim))


def ginibre_matrix(rows: int, cols: int, rng: np.random.Generator) -> ComplexMatrix:
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2.0)


def random_seeds(seed: int, count: int) -> list:
    """Derive `count` independent integer seeds from one master seed."""
    if count <= 0:
        return []
    return [int(s) for s in np.random.SeedSequence(seed).generate_state(count)]


def max_abs(m: Union[ComplexMatrix, float]) -> float:
    return float(np.max(np.abs(np.asarray(m)), initial=0.0))
