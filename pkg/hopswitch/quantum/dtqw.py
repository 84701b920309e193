"""
Reference one-dimensional discrete-time quantum walk.

One step is U = T (I (x) C): the coin rotates every position's coin pair, then
the conditional shift moves coin-|0> amplitude one site right and coin-|1>
amplitude one site left.  The lattice is finite ([-n, n], no wraparound) and
run_walk sizes it to the step count, so the boundary never binds.  This is a
pure-state unitary simulation.
"""

import logging
from typing import Dict

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from hopswitch.config import settings
from hopswitch.errors import BoundaryOverflowError, DimensionMismatchError, NormalizationError, ParameterRangeError
from hopswitch.quantum.coins import CoinOperator
from hopswitch.quantum.numerics import frozen

logger = logging.getLogger(__name__)

PositionDistribution = Dict[int, float]


class WalkState(BaseModel):
    """Amplitudes indexed [position + n_max, coin]."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n_max: int
    amplitudes: np.ndarray

    @field_validator("amplitudes", mode="before")
    @classmethod
    def _coerce(cls, value):
        return frozen(value)

    @model_validator(mode="after")
    def _check_invariants(self) -> "WalkState":
        if self.n_max < 0:
            raise ParameterRangeError(f"n_max must be >= 0, got {self.n_max}")
        expected = (2 * self.n_max + 1, 2)
        if self.amplitudes.shape != expected:
            raise DimensionMismatchError(f"walk amplitudes must have shape {expected}, got {self.amplitudes.shape}")
        norm = float(np.sum(np.abs(self.amplitudes) ** 2))
        if abs(norm - 1.0) > settings.STATE_TOLERANCE:
            raise NormalizationError(f"walk state has norm^2 {norm:.12g}, expected 1")
        return self

    @property
    def positions(self) -> range:
        return range(-self.n_max, self.n_max + 1)

    def amplitude(self, position: int, coin: int) -> complex:
        return complex(self.amplitudes[position + self.n_max, coin])


def coin_state_vector(name: str) -> np.ndarray:
    """'0', '1' or 'balanced' = (|0> + i|1>)/sqrt2."""
    if name == "0":
        return np.array([1.0, 0.0], dtype=np.complex128)
    if name == "1":
        return np.array([0.0, 1.0], dtype=np.complex128)
    if name == "balanced":
        return np.array([1.0, 1j], dtype=np.complex128) / np.sqrt(2.0)
    raise ParameterRangeError(f"unknown coin state {name!r} (0 | 1 | balanced)")


def initial_walk_state(n_max: int, initial_coin) -> WalkState:
    """Walker at the origin with the given coin vector."""
    coin_vec = np.asarray(initial_coin, dtype=np.complex128).ravel()
    if coin_vec.shape != (2,):
        raise DimensionMismatchError(f"initial coin must be a 2-vector, got shape {coin_vec.shape}")
    amplitudes = np.zeros((2 * n_max + 1, 2), dtype=np.complex128)
    amplitudes[n_max] = coin_vec
    return WalkState(n_max=n_max, amplitudes=amplitudes)


def walk_step(s: WalkState, coin: CoinOperator) -> WalkState:
    """Coin toss everywhere, then shift coin 0 by +1 and coin 1 by -1."""
    a = s.amplitudes
    if np.any(a[0] != 0) or np.any(a[-1] != 0):
        raise BoundaryOverflowError(f"walker support reaches the lattice edge (n_max={s.n_max})")
    tossed = a @ coin.matrix.T
    shifted = np.zeros_like(tossed)
    shifted[1:, 0] = tossed[:-1, 0]
    shifted[:-1, 1] = tossed[1:, 1]
    return WalkState(n_max=s.n_max, amplitudes=shifted)


def position_distribution(s: WalkState) -> PositionDistribution:
    probabilities = np.sum(np.abs(s.amplitudes) ** 2, axis=1)
    return {x: float(p) for x, p in zip(s.positions, probabilities)}


def run_walk(steps: int, initial_coin, coin: CoinOperator) -> PositionDistribution:
    """Walk `steps` steps from the origin on a lattice of 2 * steps + 1 sites."""
    if steps < 0:
        raise ParameterRangeError(f"steps must be >= 0, got {steps}")
    state = initial_walk_state(steps, initial_coin)
    for _ in range(steps):
        state = walk_step(state, coin)
    dist = position_distribution(state)
    logger.debug("Walk of %d steps with coin %s: mean displacement %.6f", steps, coin.name, mean_displacement(dist))
    return dist


def mean_displacement(dist: PositionDistribution) -> float:
    return float(sum(x * p for x, p in dist.items()))


def distribution_variance(dist: PositionDistribution) -> float:
    mean = mean_displacement(dist)
    return float(sum((x - mean) ** 2 * p for x, p in dist.items()))
