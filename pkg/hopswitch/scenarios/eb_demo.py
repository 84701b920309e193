"""
Heralded noiseless transmission through two entanglement-breaking channels.

The carrier goes through the switch of E and D (both eb_xz unless spec files
are given) with control |+>; the control is measured in {|+>, |->} and each
outcome gets a correction unitary, {+: I, -: Y} by default or the best Pauli
when --search-corrections is set.  The check is repeated on `trials` seeded
random qubit states.
"""

import logging

from hopswitch.models.common import ScenarioOutcome
from hopswitch.models.specs import ScenarioConfig
from hopswitch.quantum.channels import eb_xz, is_entanglement_breaking
from hopswitch.quantum.measurement import (
    heralded_correction_check,
    measure_control,
    pauli_correction_search,
    plus_minus_basis,
)
from hopswitch.quantum.numerics import PAULIS, random_seeds
from hopswitch.quantum.states import DensityMatrix, named_state, random_density_matrix
from hopswitch.quantum.supermaps import apply_joint, quantum_switch
from hopswitch.scenarios.base import BaseScenario
from hopswitch.services.reporting import rounded
from hopswitch.services.resolvers import load_channel, resolve_state

logger = logging.getLogger(__name__)

DEFAULT_CORRECTIONS = {"+": "I", "-": "Y"}


class EntanglementBreakingDemo(BaseScenario):
    name = "eb-demo"
    description = "Heralded correction through the switch of two entanglement-breaking channels"

    def run(self, cfg: ScenarioConfig) -> ScenarioOutcome:
        e = load_channel(cfg.channel_e) if cfg.channel_e else eb_xz()
        d = load_channel(cfg.channel_d) if cfg.channel_d else eb_xz()
        switch = quantum_switch(e, d)
        plus = named_state("plus")

        def check(carrier: DensityMatrix):
            outcomes = measure_control(apply_joint(switch, carrier, plus), plus_minus_basis())
            if cfg.search_corrections:
                return outcomes, pauli_correction_search(outcomes, carrier)
            corrections = {label: PAULIS[pauli] for label, pauli in DEFAULT_CORRECTIONS.items()}
            return outcomes, heralded_correction_check(outcomes, carrier, corrections, DEFAULT_CORRECTIONS)

        carrier = resolve_state(cfg.carrier, e.dim)
        outcomes, report = check(carrier)

        random_worst = 0.0
        for seed in random_seeds(cfg.seed, cfg.trials):
            _, random_report = check(random_density_matrix(e.dim, seed))
            random_worst = max(random_worst, random_report.worst_case)

        worst = max(report.worst_case, random_worst)
        corrected = worst <= cfg.tolerance
        logger.info("eb-demo | worst-case corrected distance %.3e over %d random states", worst, cfg.trials)

        results = {
            "entanglement_breaking": {"E": is_entanglement_breaking(e), "D": is_entanglement_breaking(d)},
            "outcomes": [{"label": o.label, "probability": rounded(o.probability)} for o in outcomes],
            "corrections": report.corrections,
            "per_outcome_distance": {
                label: (rounded(dist) if dist is not None else None) for label, dist in report.per_outcome.items()
            },
            "worst_case": rounded(report.worst_case),
            "random_states": cfg.trials,
            "random_worst_case": rounded(random_worst),
        }
        return ScenarioOutcome(results=results, verdict="corrected" if corrected else "not-corrected")
