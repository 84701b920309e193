"""
Projective measurement of the control qubit and heralded correction.

Measuring the control of a switch output in {|+>, |->} heralds which Pauli
the carrier picked up; applying the matching correction restores the input.
This is how an entanglement-breaking pair of channels still carries a qubit
noiselessly through the switch.
"""

import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg
from pydantic import BaseModel, ConfigDict, Field

from hopswitch.config import settings
from hopswitch.errors import (
    DimensionMismatchError,
    MissingCorrectionError,
    NonUnitaryError,
    NormalizationError,
)
from hopswitch.models.results import CorrectionReport
from hopswitch.quantum.numerics import PAULIS, dagger, is_unitary, partial_trace, projector, tensor, trace_distance
from hopswitch.quantum.states import DensityMatrix
from hopswitch.quantum.supermaps import CONTROL_DIM, JointState

logger = logging.getLogger(__name__)

# Outcomes below this probability carry no post-measurement state
ZERO_PROBABILITY = 1e-12

Basis = Sequence[Tuple[str, np.ndarray]]


class MeasurementOutcome(BaseModel):
    """One control-measurement outcome; `post_state` is None when probability is ~0."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: str
    probability: float = Field(..., ge=0.0, le=1.0)
    post_state: Optional[DensityMatrix] = None


def plus_minus_basis() -> List[Tuple[str, np.ndarray]]:
    s = 1.0 / np.sqrt(2.0)
    return [("+", np.array([s, s], dtype=np.complex128)), ("-", np.array([s, -s], dtype=np.complex128))]


def computational_basis() -> List[Tuple[str, np.ndarray]]:
    return [("0", np.array([1, 0], dtype=np.complex128)), ("1", np.array([0, 1], dtype=np.complex128))]


def _check_basis(basis: Basis) -> None:
    if len(basis) != CONTROL_DIM:
        raise DimensionMismatchError(f"a control basis has {CONTROL_DIM} vectors, got {len(basis)}")
    vectors = np.array([np.asarray(v, dtype=np.complex128).ravel() for _, v in basis])
    if vectors.shape != (CONTROL_DIM, CONTROL_DIM):
        raise DimensionMismatchError(f"control basis vectors must be 2-vectors, got shape {vectors.shape}")
    gram = np.conj(vectors) @ vectors.T
    if np.max(np.abs(gram - np.eye(CONTROL_DIM))) > settings.UNITARY_TOLERANCE:
        raise NormalizationError("control measurement basis is not orthonormal")


def _post_measurement_carrier(block: np.ndarray, probability: float) -> DensityMatrix:
    """Renormalize an unnormalized carrier block into a state.

    For small outcome probabilities the division amplifies roundoff, so the block
    is Hermitized and its eigenvalues clipped at zero before renormalizing.
    """
    eigenvalues, vectors = scipy.linalg.eigh(0.5 * (block + dagger(block)) / probability)
    clipped = np.clip(eigenvalues, 0.0, None)
    rebuilt = (vectors * clipped) @ dagger(vectors)
    return DensityMatrix(matrix=rebuilt / np.sum(clipped))


def measure_control(js: JointState, basis: Basis) -> List[MeasurementOutcome]:
    """Project the control on each basis vector; return probabilities and carrier post-states."""
    _check_basis(basis)
    identity = np.eye(js.carrier_dim)
    outcomes = []
    for label, vector in basis:
        proj = tensor(identity, projector(vector))
        block = partial_trace(proj @ js.matrix @ proj, js.carrier_dim, CONTROL_DIM, keep="first")
        probability = float(np.real(np.trace(block)))
        if probability <= ZERO_PROBABILITY:
            logger.warning("Control outcome %s has zero probability (%.3e)", label, probability)
            outcomes.append(MeasurementOutcome(label=label, probability=0.0))
            continue
        outcomes.append(
            MeasurementOutcome(
                label=label,
                probability=min(1.0, probability),
                post_state=_post_measurement_carrier(block, probability),
            )
        )
    logger.debug("Control measurement probabilities: %s", {o.label: round(o.probability, 12) for o in outcomes})
    return outcomes


def heralded_correction_check(
    outcomes: Sequence[MeasurementOutcome],
    target: DensityMatrix,
    corrections: Mapping[str, np.ndarray],
    correction_labels: Optional[Mapping[str, str]] = None,
) -> CorrectionReport:
    """Apply each outcome's correction unitary and report the distance to `target`."""
    per_outcome: Dict[str, Optional[float]] = {}
    for outcome in outcomes:
        if outcome.post_state is None:
            per_outcome[outcome.label] = None
            continue
        if outcome.label not in corrections:
            raise MissingCorrectionError(f"no correction supplied for outcome {outcome.label!r}")
        u = np.asarray(corrections[outcome.label], dtype=np.complex128)
        if u.shape != (target.dim, target.dim):
            raise DimensionMismatchError(f"correction for {outcome.label!r} has shape {u.shape}, carrier dim is {target.dim}")
        if not is_unitary(u, settings.UNITARY_TOLERANCE):
            raise NonUnitaryError(f"correction for {outcome.label!r} is not unitary")
        corrected = u @ outcome.post_state.matrix @ dagger(u)
        per_outcome[outcome.label] = trace_distance(corrected, target)

    distances = [d for d in per_outcome.values() if d is not None]
    report = CorrectionReport(
        per_outcome=per_outcome,
        corrections=dict(correction_labels or {}),
        worst_case=max(distances) if distances else 0.0,
    )
    logger.info("Heralded correction worst-case distance %.3e", report.worst_case)
    return report


def pauli_correction_search(
    outcomes: Sequence[MeasurementOutcome],
    target: DensityMatrix,
) -> CorrectionReport:
    """Pick, per outcome, the Pauli in {I, X, Y, Z} that lands closest to `target` (qubits only)."""
    if target.dim != 2:
        raise DimensionMismatchError(f"Pauli correction search needs a qubit carrier, got dim {target.dim}")
    chosen: Dict[str, np.ndarray] = {}
    labels: Dict[str, str] = {}
    for outcome in outcomes:
        if outcome.post_state is None:
            continue
        best = min(
            PAULIS,
            key=lambda name: trace_distance(PAULIS[name] @ outcome.post_state.matrix @ dagger(PAULIS[name]), target),
        )
        chosen[outcome.label] = PAULIS[best]
        labels[outcome.label] = best
    return heralded_correction_check(outcomes, target, chosen, labels)
