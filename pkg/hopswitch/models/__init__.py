from hopswitch.models.common import ErrorDetail, ScenarioOutcome, ScenarioReport
from hopswitch.models.results import CorrectionReport, CrossTermReport, EquivalenceReport, SweepSummary, SweepTrial
from hopswitch.models.specs import (
    ChannelSpec,
    CoinSpec,
    ExtensionSpec,
    Scenario,
    ScenarioConfig,
    StateSpec,
    SweepFamily,
)

__all__ = [
    "ErrorDetail",
    "ScenarioOutcome",
    "ScenarioReport",
    "CorrectionReport",
    "CrossTermReport",
    "EquivalenceReport",
    "SweepSummary",
    "SweepTrial",
    "ChannelSpec",
    "CoinSpec",
    "ExtensionSpec",
    "Scenario",
    "ScenarioConfig",
    "StateSpec",
    "SweepFamily",
]
