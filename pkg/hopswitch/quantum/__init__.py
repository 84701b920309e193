from hopswitch.quantum.states import DensityMatrix, named_state
from hopswitch.quantum.channels import KrausChannel, apply, compose, make_channel
from hopswitch.quantum.vacuum import VacuumExtendedChannel, make_vacuum_extension
from hopswitch.quantum.supermaps import JointState, apply_joint, quantum_switch, spatial_superposition
from hopswitch.quantum.coins import CoinOperator, named_coin
from hopswitch.quantum.walk_hybrid import cross_term_condition, evolve, hop_channel, switch_equivalence
from hopswitch.quantum.dtqw import WalkState, run_walk, walk_step
from hopswitch.quantum.measurement import MeasurementOutcome, heralded_correction_check, measure_control

__all__ = [
    "DensityMatrix",
    "named_state",
    "KrausChannel",
    "apply",
    "compose",
    "make_channel",
    "VacuumExtendedChannel",
    "make_vacuum_extension",
    "JointState",
    "apply_joint",
    "quantum_switch",
    "spatial_superposition",
    "CoinOperator",
    "named_coin",
    "cross_term_condition",
    "evolve",
    "hop_channel",
    "switch_equivalence",
    "WalkState",
    "run_walk",
    "walk_step",
    "MeasurementOutcome",
    "heralded_correction_check",
    "measure_control",
]
