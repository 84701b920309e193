"""
The two quantum-path supermaps, materialized as Kraus channels on the joint
carrier (x) control space (carrier first, control second):

    spatial superposition   S_ij = beta_j E_i (x) |0><0| + alpha_i D_j (x) |1><1|
    quantum switch          S_ij = E_i D_j   (x) |0><0| + D_j E_i   (x) |1><1|

Kraus lists are ordered i-major, j-minor.  Because both are ordinary
KrausChannels, `apply` and the CPTP validation serve channels and supermaps alike.
"""

import logging
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from hopswitch.errors import DimensionMismatchError, ParameterRangeError
from hopswitch.quantum.channels import KrausChannel, apply, make_channel
from hopswitch.quantum.numerics import ComplexMatrix, partial_trace, tensor
from hopswitch.quantum.states import DensityMatrix
from hopswitch.quantum.vacuum import VacuumExtendedChannel

logger = logging.getLogger(__name__)

CONTROL_DIM = 2

P0 = np.array([[1, 0], [0, 0]], dtype=np.complex128)
P1 = np.array([[0, 0], [0, 1]], dtype=np.complex128)


class JointState(BaseModel):
    """Carrier (x) control density matrix with a two-level control."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    carrier_dim: int
    joint: DensityMatrix

    @model_validator(mode="after")
    def _check_dims(self) -> "JointState":
        if self.joint.dim != self.carrier_dim * CONTROL_DIM:
            raise DimensionMismatchError(
                f"joint state has dim {self.joint.dim}, expected {self.carrier_dim} x {CONTROL_DIM}"
            )
        return self

    @property
    def matrix(self) -> ComplexMatrix:
        return self.joint.matrix


def joint_state(carrier: DensityMatrix, control: DensityMatrix) -> JointState:
    if control.dim != CONTROL_DIM:
        raise DimensionMismatchError(f"control must be a qubit, got dim {control.dim}")
    return JointState(carrier_dim=carrier.dim, joint=DensityMatrix(matrix=tensor(carrier.matrix, control.matrix)))


def carrier_marginal(js: JointState) -> DensityMatrix:
    return DensityMatrix(matrix=partial_trace(js.matrix, js.carrier_dim, CONTROL_DIM, keep="first"))


def control_marginal(js: JointState) -> DensityMatrix:
    return DensityMatrix(matrix=partial_trace(js.matrix, js.carrier_dim, CONTROL_DIM, keep="second"))


def control_block(js: JointState, row: Literal[0, 1], col: Literal[0, 1]) -> ComplexMatrix:
    """Carrier operator multiplying |row><col| on the control."""
    if row not in (0, 1) or col not in (0, 1):
        raise ParameterRangeError(f"control indices must be 0 or 1, got ({row}, {col})")
    d = js.carrier_dim
    return js.matrix.reshape(d, CONTROL_DIM, d, CONTROL_DIM)[:, row, :, col].copy()


def _check_pair(e_dim: int, d_dim: int) -> None:
    if e_dim != d_dim:
        raise DimensionMismatchError(f"channels act on different carrier dims ({e_dim} vs {d_dim})")


def spatial_superposition(e: VacuumExtendedChannel, d: VacuumExtendedChannel) -> KrausChannel:
    """Route the carrier through E on control |0>, through D on control |1>."""
    _check_pair(e.dim, d.dim)
    kraus = [
        tensor(beta_j * e_i, P0) + tensor(alpha_i * d_j, P1)
        for e_i, alpha_i in zip(e.kraus, e.amplitudes)
        for d_j, beta_j in zip(d.kraus, d.amplitudes)
    ]
    logger.debug("Built spatial superposition with %d Kraus operators on dim %d", len(kraus), 2 * e.dim)
    return make_channel(kraus, name=f"spatial({e.name},{d.name})")


def superposition_of_unitaries(u1: ComplexMatrix, u2: ComplexMatrix) -> KrausChannel:
    """Single-operator map U1 (x) |0><0| + U2 (x) |1><1|."""
    u1, u2 = np.asarray(u1, dtype=np.complex128), np.asarray(u2, dtype=np.complex128)
    _check_pair(u1.shape[0], u2.shape[0])
    return make_channel([tensor(u1, P0) + tensor(u2, P1)], name="unitary-superposition")


def quantum_switch(e: KrausChannel, d: KrausChannel) -> KrausChannel:
    """Order E after D on control |0>, D after E on control |1>."""
    _check_pair(e.dim, d.dim)
    kraus = [tensor(e_i @ d_j, P0) + tensor(d_j @ e_i, P1) for e_i in e.kraus for d_j in d.kraus]
    logger.debug("Built quantum switch with %d Kraus operators on dim %d", len(kraus), 2 * e.dim)
    return make_channel(kraus, name=f"switch({e.name},{d.name})")


def apply_joint(supermap: KrausChannel, carrier: DensityMatrix, control: DensityMatrix) -> JointState:
    """Apply a joint-space map to carrier (x) control."""
    if supermap.dim != carrier.dim * CONTROL_DIM:
        raise DimensionMismatchError(
            f"map acts on dim {supermap.dim}, carrier (x) control has dim {carrier.dim * CONTROL_DIM}"
        )
    return apply_to_joint(supermap, joint_state(carrier, control))


def apply_to_joint(supermap: KrausChannel, js: JointState) -> JointState:
    if supermap.dim != js.joint.dim:
        raise DimensionMismatchError(f"map acts on dim {supermap.dim}, joint state has dim {js.joint.dim}")
    return JointState(carrier_dim=js.carrier_dim, joint=apply(supermap, js.joint))
