"""Reference discrete-time quantum walk scenario (distribution exported as CSV)."""

import logging

from hopswitch.models.common import ScenarioOutcome
from hopswitch.models.specs import ScenarioConfig
from hopswitch.quantum.dtqw import coin_state_vector, distribution_variance, mean_displacement, run_walk
from hopswitch.scenarios.base import BaseScenario
from hopswitch.services.reporting import rounded
from hopswitch.services.resolvers import resolve_coin

logger = logging.getLogger(__name__)


class QuantumWalkScenario(BaseScenario):
    name = "dtqw"
    description = "One-dimensional discrete-time quantum walk from the origin"

    def run(self, cfg: ScenarioConfig) -> ScenarioOutcome:
        coin = resolve_coin(cfg.coin)
        dist = run_walk(cfg.steps, coin_state_vector(cfg.coin_state), coin)
        mean = mean_displacement(dist)
        logger.info("dtqw | steps=%d coin=%s coin_state=%s mean=%.6f", cfg.steps, coin.name, cfg.coin_state, mean)
        return ScenarioOutcome(
            results={
                "steps": cfg.steps,
                "distribution": {str(x): rounded(p) for x, p in dist.items()},
                "mean_displacement": rounded(mean),
                "variance": rounded(distribution_variance(dist)),
            },
            distribution=sorted(dist.items()),
        )
