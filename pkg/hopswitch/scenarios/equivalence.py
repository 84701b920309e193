"""
Walk-vs-switch scenarios.

switch-equiv  – two coin-tossed hops of the spatial superposition against the
                quantum switch, decided over the probe-state set.
walk-hybrid   – evolve the hop channel for --hops hops from any control state
                and report the trajectory; two hops from |+> are also compared
                with the switch.
"""

import logging

from hopswitch.models.common import ScenarioOutcome
from hopswitch.models.specs import ScenarioConfig
from hopswitch.quantum.numerics import fidelity, trace_distance
from hopswitch.quantum.states import named_state
from hopswitch.quantum.supermaps import apply_joint, quantum_switch, spatial_superposition
from hopswitch.quantum.walk_hybrid import (
    EQUIVALENCE_HOPS,
    cross_term_condition,
    evolve,
    hop_channel,
    hop_trajectory,
    switch_equivalence,
)
from hopswitch.scenarios.base import BaseScenario
from hopswitch.services.reporting import describe_joint_state, rounded
from hopswitch.services.resolvers import resolve_coin, resolve_extension_pair, resolve_state

logger = logging.getLogger(__name__)


def _verdict(equivalent: bool) -> str:
    return "equivalent" if equivalent else "not-equivalent"


class SwitchEquivalenceScenario(BaseScenario):
    name = "switch-equiv"
    description = "Compare two coin-tossed spatial hops with the quantum switch"

    def run(self, cfg: ScenarioConfig) -> ScenarioOutcome:
        e_ext, d_ext = resolve_extension_pair(cfg)
        coin = resolve_coin(cfg.coin)
        carrier = resolve_state(cfg.carrier, e_ext.dim)
        logger.info("switch-equiv | E=%s D=%s coin=%s carrier=%s", e_ext.name, d_ext.name, coin.name, cfg.carrier)

        map_report = switch_equivalence(e_ext, d_ext, coin, tolerance=cfg.tolerance)
        plus = named_state("plus")
        walked = evolve(hop_channel(spatial_superposition(e_ext, d_ext), coin), EQUIVALENCE_HOPS, carrier, plus)
        switched = apply_joint(quantum_switch(e_ext.channel, d_ext.channel), carrier, plus)
        condition = cross_term_condition(e_ext, d_ext)

        results = {
            "distance": rounded(map_report.distance),
            "equivalent": map_report.equivalent,
            "tolerance": cfg.tolerance,
            "probe_states": map_report.probes,
            "carrier_distance": rounded(trace_distance(walked.joint, switched.joint)),
            "carrier_fidelity": rounded(fidelity(walked.joint, switched.joint)),
            "cross_term_condition": {
                "holds": condition.holds,
                "violating_tuples": [list(t) for t in condition.violating_tuples],
            },
        }
        return ScenarioOutcome(results=results, verdict=_verdict(map_report.equivalent), equivalent=map_report.equivalent)


class WalkHybridScenario(BaseScenario):
    name = "walk-hybrid"
    description = "Evolve the coin-augmented hop channel and report every hop"

    def run(self, cfg: ScenarioConfig) -> ScenarioOutcome:
        e_ext, d_ext = resolve_extension_pair(cfg)
        coin = resolve_coin(cfg.coin)
        carrier = resolve_state(cfg.carrier, e_ext.dim)
        control = resolve_state(cfg.control, 2)

        w = hop_channel(spatial_superposition(e_ext, d_ext), coin)
        trajectory = hop_trajectory(w, cfg.hops, carrier, control)
        results = {
            "hops": cfg.hops,
            "closure_residual": rounded(w.closure_residual()),
            "trajectory": [describe_joint_state(js) for js in trajectory],
        }

        outcome = ScenarioOutcome(results=results)
        # Only two hops from |+> carry an equivalence claim
        if cfg.hops == EQUIVALENCE_HOPS and cfg.control.lower() == "plus":
            switched = apply_joint(quantum_switch(e_ext.channel, d_ext.channel), carrier, control)
            distance = trace_distance(trajectory[-1].joint, switched.joint)
            equivalent = distance <= cfg.tolerance
            results["switch_distance"] = rounded(distance)
            results["switch_fidelity"] = rounded(fidelity(trajectory[-1].joint, switched.joint))
            results["equivalent"] = equivalent
            outcome = ScenarioOutcome(results=results, verdict=_verdict(equivalent), equivalent=equivalent)
        return outcome
