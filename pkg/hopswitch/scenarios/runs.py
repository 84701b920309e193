"""Single applications of the spatial-superposition and quantum-switch supermaps."""

import logging

from hopswitch.models.common import ScenarioOutcome
from hopswitch.models.specs import ScenarioConfig
from hopswitch.quantum.measurement import measure_control, plus_minus_basis
from hopswitch.quantum.supermaps import apply_joint, quantum_switch, spatial_superposition
from hopswitch.scenarios.base import BaseScenario
from hopswitch.services.reporting import describe_joint_state, encode_operator, rounded
from hopswitch.services.resolvers import resolve_extension_pair, resolve_state

logger = logging.getLogger(__name__)


class SpatialRunScenario(BaseScenario):
    name = "spatial-run"
    description = "Send a carrier through the spatial superposition of E and D"

    def run(self, cfg: ScenarioConfig) -> ScenarioOutcome:
        e_ext, d_ext = resolve_extension_pair(cfg)
        carrier = resolve_state(cfg.carrier, e_ext.dim)
        control = resolve_state(cfg.control, 2)

        supermap = spatial_superposition(e_ext, d_ext)
        output = apply_joint(supermap, carrier, control)
        logger.info("spatial-run | %d Kraus operators on dim %d", supermap.kraus_count, supermap.dim)
        return ScenarioOutcome(
            results={
                "kraus_count": supermap.kraus_count,
                "closure_residual": rounded(supermap.closure_residual()),
                "output": describe_joint_state(output),
            }
        )


class SwitchRunScenario(BaseScenario):
    name = "switch-run"
    description = "Send a carrier through the quantum switch of E and D"

    def run(self, cfg: ScenarioConfig) -> ScenarioOutcome:
        e_ext, d_ext = resolve_extension_pair(cfg)
        carrier = resolve_state(cfg.carrier, e_ext.dim)
        control = resolve_state(cfg.control, 2)

        supermap = quantum_switch(e_ext.channel, d_ext.channel)
        output = apply_joint(supermap, carrier, control)
        outcomes = measure_control(output, plus_minus_basis())
        logger.info("switch-run | %d Kraus operators on dim %d", supermap.kraus_count, supermap.dim)
        return ScenarioOutcome(
            results={
                "kraus_count": supermap.kraus_count,
                "closure_residual": rounded(supermap.closure_residual()),
                "output": describe_joint_state(output),
                "control_measurement": [
                    {
                        "label": o.label,
                        "probability": rounded(o.probability),
                        "post_state": encode_operator(o.post_state.matrix) if o.post_state else None,
                    }
                    for o in outcomes
                ],
            }
        )
