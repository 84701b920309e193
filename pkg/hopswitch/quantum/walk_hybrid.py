"""
Coin-augmented hop channel and its comparison against the quantum switch.

One hop is W = S o (I (x) C): the coin C rotates the control, then the spatial
superposition S routes the carrier.  Starting from control |+> with C = X, two
hops reproduce the quantum switch exactly for unitary channels; for general
channels the result depends on the vacuum amplitudes.

Equivalence is always decided numerically (trace distance between the two
joint outputs on a set of carrier states), never by manipulating the expanded
two-hop sum symbolically.  Each hop uses a fresh, independent copy of the same
channel pair.
"""

import itertools
import logging
from typing import List, Optional

import numpy as np

from hopswitch.config import settings
from hopswitch.errors import DimensionMismatchError, ParameterRangeError
from hopswitch.models.results import CrossTermReport, EquivalenceReport
from hopswitch.quantum.channels import KrausChannel, apply_to_operator, make_channel
from hopswitch.quantum.coins import CoinOperator
from hopswitch.quantum.numerics import dagger, tensor, trace_distance
from hopswitch.quantum.states import DensityMatrix, named_state, probe_states
from hopswitch.quantum.supermaps import (
    CONTROL_DIM,
    JointState,
    P0,
    P1,
    apply_joint,
    apply_to_joint,
    joint_state,
    quantum_switch,
    spatial_superposition,
)
from hopswitch.quantum.vacuum import VacuumExtendedChannel, amplitude_weights

logger = logging.getLogger(__name__)

EQUIVALENCE_HOPS = 2


def hop_channel(s: KrausChannel, coin: CoinOperator) -> KrausChannel:
    """Kraus list {S_ij (I (x) C)}."""
    if s.dim % CONTROL_DIM != 0:
        raise DimensionMismatchError(f"hop map must act on carrier (x) control, got dim {s.dim}")
    toss = tensor(np.eye(s.dim // CONTROL_DIM), coin.matrix)
    return make_channel([k @ toss for k in s.kraus], name=f"hop({s.name},{coin.name})")


def hop_trajectory(w: KrausChannel, hops: int, carrier: DensityMatrix, control: DensityMatrix) -> List[JointState]:
    """Joint state after 0, 1, ..., hops applications of w."""
    if hops < 0:
        raise ParameterRangeError(f"hops must be >= 0, got {hops}")
    if w.dim != carrier.dim * CONTROL_DIM:
        raise DimensionMismatchError(f"hop channel acts on dim {w.dim}, carrier (x) control has dim {carrier.dim * CONTROL_DIM}")
    states = [joint_state(carrier, control)]
    for hop in range(hops):
        states.append(apply_to_joint(w, states[-1]))
        logger.debug("hop %d/%d applied", hop + 1, hops)
    return states


def evolve(w: KrausChannel, hops: int, carrier: DensityMatrix, control: DensityMatrix) -> JointState:
    """Apply w `hops` times to carrier (x) control."""
    return hop_trajectory(w, hops, carrier, control)[-1]


def switch_equivalence(
    e_ext: VacuumExtendedChannel,
    d_ext: VacuumExtendedChannel,
    coin: CoinOperator,
    carrier: Optional[DensityMatrix] = None,
    tolerance: Optional[float] = None,
) -> EquivalenceReport:
    """Compare two hops of the coin-tossed spatial superposition with the switch.

    The control starts in |+><+|.  With no carrier given, the maximum distance over
    the d^2 probe states is reported, which decides equality of the two maps.
    """
    tolerance = settings.EQUIVALENCE_TOLERANCE if tolerance is None else tolerance
    if e_ext.dim != d_ext.dim:
        raise DimensionMismatchError(f"channels act on different carrier dims ({e_ext.dim} vs {d_ext.dim})")
    if carrier is not None and carrier.dim != e_ext.dim:
        raise DimensionMismatchError(f"carrier has dim {carrier.dim}, channels act on dim {e_ext.dim}")

    w = hop_channel(spatial_superposition(e_ext, d_ext), coin)
    switch = quantum_switch(e_ext.channel, d_ext.channel)
    plus = named_state("plus")
    carriers = [carrier] if carrier is not None else probe_states(e_ext.dim)

    distance = 0.0
    for rho in carriers:
        walked = evolve(w, EQUIVALENCE_HOPS, rho, plus)
        switched = apply_joint(switch, rho, plus)
        distance = max(distance, trace_distance(walked.joint, switched.joint))

    report = EquivalenceReport(
        distance=distance,
        tolerance=tolerance,
        hop_count=EQUIVALENCE_HOPS,
        probes=len(carriers),
    )
    logger.info(
        "Switch equivalence | E=%s D=%s coin=%s distance=%.3e equivalent=%s",
        e_ext.name, d_ext.name, coin.name, report.distance, report.equivalent,
    )
    return report


def cross_term_condition(
    e_ext: VacuumExtendedChannel,
    d_ext: VacuumExtendedChannel,
    tolerance: Optional[float] = None,
) -> CrossTermReport:
    """Sufficient amplitude condition for the two-hop cross terms to reduce to s=l, j=m.

    A tuple (s, j, l, m) with s != l or j != m violates the condition when
    |alpha_s beta_j* alpha_l* beta_m*| exceeds the tolerance.
    """
    tolerance = settings.AMPLITUDE_TOLERANCE if tolerance is None else tolerance
    alphas, betas = e_ext.amplitudes, d_ext.amplitudes
    violating = []
    for s, j, l, m in itertools.product(range(len(alphas)), range(len(betas)), range(len(alphas)), range(len(betas))):
        if s == l and j == m:
            continue
        product = alphas[s] * np.conj(betas[j]) * np.conj(alphas[l]) * np.conj(betas[m])
        if abs(product) > tolerance:
            violating.append((s, j, l, m))
    report = CrossTermReport(holds=not violating, violating_tuples=violating)
    logger.debug("Cross-term condition | holds=%s violations=%d", report.holds, len(violating))
    return report


def cross_term_prediction(
    e_ext: VacuumExtendedChannel,
    d_ext: VacuumExtendedChannel,
    carrier: DensityMatrix,
) -> JointState:
    """Two-hop output predicted when only the s=l, j=m cross terms survive.

    Diagonal control blocks carry E(D(rho))/2 and D(E(rho))/2; the |0><1| block is
    (1/2) sum_{l,j} |alpha_l|^2 |beta_j|^2 E_l D_j rho E_l^dag D_j^dag.  This is the
    |alpha|^2 |beta|^2 weighted mixture of the concentrated-extension outputs, so it
    is always a valid state.  It equals the switch only if the weighted survivors
    rebuild the switch's full cross term.
    """
    if e_ext.dim != d_ext.dim or carrier.dim != e_ext.dim:
        raise DimensionMismatchError("carrier and both channels must share one dimension")
    e, d = e_ext.channel, d_ext.channel
    rho = carrier.matrix

    block00 = apply_to_operator(e, apply_to_operator(d, rho))
    block11 = apply_to_operator(d, apply_to_operator(e, rho))
    block01 = np.zeros_like(rho)
    for e_l, alpha_weight in zip(e.kraus, amplitude_weights(e_ext)):
        for d_j, beta_weight in zip(d.kraus, amplitude_weights(d_ext)):
            block01 += alpha_weight * beta_weight * (e_l @ d_j @ rho @ dagger(e_l) @ dagger(d_j))

    coherence = np.array([[0, 1], [0, 0]], dtype=np.complex128)
    joint = 0.5 * (
        tensor(block00, P0)
        + tensor(block11, P1)
        + tensor(block01, coherence)
        + tensor(dagger(block01), dagger(coherence))
    )
    return JointState(carrier_dim=carrier.dim, joint=DensityMatrix(matrix=joint))
