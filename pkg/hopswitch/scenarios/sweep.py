"""
Randomized equivalence sweep.

Each trial draws a fresh channel pair from its own seed (derived from the
master seed), so a trial's result does not depend on how many trials run or
in which order they are scheduled.  With SWEEP_WORKERS > 1 trials fan out over
a thread pool; `map` hands results back in trial-index order either way.

Families:
  unitary         : two Haar unitaries of dimension `dim` (single-Kraus, amplitude [1])
  random-channel  : two random `kraus_count`-operator channels with uniform extensions
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Tuple

import numpy as np

from hopswitch.config import settings
from hopswitch.models.common import ScenarioOutcome
from hopswitch.models.results import SweepSummary, SweepTrial
from hopswitch.models.specs import ScenarioConfig, SweepFamily
from hopswitch.quantum.channels import random_channel, unitary_channel
from hopswitch.quantum.coins import CoinOperator
from hopswitch.quantum.numerics import haar_random_unitary, random_seeds
from hopswitch.quantum.vacuum import VacuumExtendedChannel, uniform_extension
from hopswitch.quantum.walk_hybrid import switch_equivalence
from hopswitch.scenarios.base import BaseScenario
from hopswitch.services.resolvers import resolve_coin

logger = logging.getLogger(__name__)


def draw_pair(cfg: ScenarioConfig, seed: int) -> Tuple[VacuumExtendedChannel, VacuumExtendedChannel]:
    seed_e, seed_d = random_seeds(seed, 2)
    if cfg.family == SweepFamily.UNITARY:
        e = unitary_channel(haar_random_unitary(cfg.dim, seed_e), name="U1")
        d = unitary_channel(haar_random_unitary(cfg.dim, seed_d), name="U2")
    else:
        e = random_channel(cfg.dim, cfg.kraus_count, seed_e)
        d = random_channel(cfg.dim, cfg.kraus_count, seed_d)
    return uniform_extension(e), uniform_extension(d)


def run_trial(cfg: ScenarioConfig, coin: CoinOperator, index: int, seed: int) -> SweepTrial:
    e_ext, d_ext = draw_pair(cfg, seed)
    report = switch_equivalence(e_ext, d_ext, coin, tolerance=cfg.tolerance)
    logger.debug("sweep trial %d (seed %d): distance %.3e", index, seed, report.distance)
    return SweepTrial(index=index, seed=seed, distance=report.distance)


def sweep(cfg: ScenarioConfig) -> SweepSummary:
    """Run cfg.trials seeded trials and aggregate max / mean distance."""
    coin = resolve_coin(cfg.coin)
    seeds = random_seeds(cfg.seed, cfg.trials)

    if settings.SWEEP_WORKERS > 1 and len(seeds) > 1:
        with ThreadPoolExecutor(max_workers=settings.SWEEP_WORKERS) as pool:
            trials = list(pool.map(lambda item: run_trial(cfg, coin, *item), enumerate(seeds)))
    else:
        trials = [run_trial(cfg, coin, index, seed) for index, seed in enumerate(seeds)]

    distances = np.array([t.distance for t in trials])
    summary = SweepSummary(
        family=cfg.family.value,
        dim=cfg.dim,
        trials=trials,
        max_distance=float(distances.max()) if trials else None,
        mean_distance=float(distances.mean()) if trials else None,
        tolerance=cfg.tolerance,
    )
    logger.info(
        "sweep | family=%s dim=%d trials=%d max=%s equivalent=%s",
        summary.family, summary.dim, len(trials), summary.max_distance, summary.equivalent,
    )
    return summary


class SweepScenario(BaseScenario):
    name = "sweep"
    description = "Randomized walk-vs-switch equivalence sweep"

    def run(self, cfg: ScenarioConfig) -> ScenarioOutcome:
        summary = sweep(cfg)
        return ScenarioOutcome(
            results=summary.model_dump(mode="json"),
            verdict="equivalent" if summary.equivalent else "not-equivalent",
            equivalent=summary.equivalent,
        )
