"""
Scenario interface shared by every CLI subcommand.

A scenario is a class attribute pair (`name`, the subcommand string, and
`description`, its --help line) plus `run(cfg)`, which turns a ScenarioConfig
into a ScenarioOutcome.  cli.py builds its subparsers from SCENARIO_MAP and
only ever calls `run`; report writing and exit statuses stay out of here.
"""

from abc import ABC, abstractmethod

from hopswitch.models.common import ScenarioOutcome
from hopswitch.models.specs import ScenarioConfig


class BaseScenario(ABC):
    """One experiment the CLI can run."""

    # Set by each subclass; SCENARIO_MAP is keyed on `name`
    name: str = "unknown"
    description: str = ""

    @abstractmethod
    def run(self, cfg: ScenarioConfig) -> ScenarioOutcome:
        """Run the experiment.

        Must be deterministic for a fixed cfg.seed, and must not put anything
        time-dependent into the returned results.
        """
        ...
