from hopswitch.scenarios.base import BaseScenario
from hopswitch.scenarios.eb_demo import EntanglementBreakingDemo
from hopswitch.scenarios.equivalence import SwitchEquivalenceScenario, WalkHybridScenario
from hopswitch.scenarios.runs import SpatialRunScenario, SwitchRunScenario
from hopswitch.scenarios.sweep import SweepScenario, sweep
from hopswitch.scenarios.walk import QuantumWalkScenario

# Map of subcommand -> scenario instance.
# Scenarios are stateless, so one instance each is shared by every run.
SCENARIO_MAP = {
    scenario.name: scenario
    for scenario in (
        SwitchEquivalenceScenario(),
        SpatialRunScenario(),
        SwitchRunScenario(),
        WalkHybridScenario(),
        EntanglementBreakingDemo(),
        QuantumWalkScenario(),
        SweepScenario(),
    )
}

__all__ = [
    "BaseScenario",
    "SCENARIO_MAP",
    "EntanglementBreakingDemo",
    "QuantumWalkScenario",
    "SpatialRunScenario",
    "SweepScenario",
    "SwitchEquivalenceScenario",
    "SwitchRunScenario",
    "WalkHybridScenario",
    "sweep",
]
