"""
Complex-number codec shared by spec files and reports.

Every complex number on disk is a two-element list [re, im].  Matrices are
lists of rows, vectors are flat lists of pairs.
"""

from typing import List, Sequence

import numpy as np

ComplexPair = List[float]


def encode_complex(z: complex) -> ComplexPair:
    z = complex(z)
    # -0.0 would make otherwise identical reports differ byte-wise
    return [float(z.real) + 0.0, float(z.imag) + 0.0]


def decode_complex(pair: Sequence[float]) -> complex:
    if len(pair) != 2:
        raise ValueError(f"complex numbers are encoded as [re, im], got {list(pair)!r}")
    return complex(float(pair[0]), float(pair[1]))


def encode_vector(v: np.ndarray) -> List[ComplexPair]:
    return [encode_complex(z) for z in np.asarray(v).ravel()]


def decode_vector(pairs: Sequence[Sequence[float]]) -> np.ndarray:
    return np.array([decode_complex(p) for p in pairs], dtype=np.complex128)


def encode_matrix(m: np.ndarray) -> List[List[ComplexPair]]:
    return [[encode_complex(z) for z in row] for row in np.asarray(m)]


def decode_matrix(rows: Sequence[Sequence[Sequence[float]]]) -> np.ndarray:
    """Rebuild a complex matrix; ragged rows are rejected."""
    decoded = [[decode_complex(p) for p in row] for row in rows]
    widths = {len(row) for row in decoded}
    if len(widths) > 1:
        raise ValueError(f"matrix rows have differing lengths {sorted(widths)}")
    return np.array(decoded, dtype=np.complex128)
