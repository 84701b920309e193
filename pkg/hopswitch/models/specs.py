"""
Pydantic models for the on-disk input formats and the resolved scenario config.

Channel spec (JSON):
    {"name": "eb_xz", "dim": 2, "kraus": [[[[re, im], ...], ...], ...]}
Extension spec: a channel spec plus
    "vacuum_amplitudes": [[re, im], ...]
"""

from __future__ import annotations

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from hopswitch.config import settings

ComplexPair = List[float]
MatrixRows = List[List[ComplexPair]]


def _check_pair(pair: ComplexPair) -> ComplexPair:
    if len(pair) != 2:
        raise ValueError(f"complex entries must be [re, im] pairs, got {pair!r}")
    return pair


class ChannelSpec(BaseModel):
    """A Kraus channel as stored in a spec file."""

    name: Optional[str] = Field(None, description="Human-readable label for reports")
    dim: int = Field(..., ge=1, description="Carrier dimension (input = output)")
    kraus: List[MatrixRows] = Field(..., min_length=1, description="Kraus operators, each a list of rows of [re, im]")

    @model_validator(mode="after")
    def _check_shapes(self) -> "ChannelSpec":
        for index, op in enumerate(self.kraus):
            if len(op) != self.dim or any(len(row) != self.dim for row in op):
                raise ValueError(f"Kraus operator {index} is not {self.dim}x{self.dim}")
            for row in op:
                for pair in row:
                    _check_pair(pair)
        return self


class ExtensionSpec(ChannelSpec):
    """A channel spec with one vacuum amplitude per Kraus operator."""

    vacuum_amplitudes: List[ComplexPair] = Field(..., min_length=1)

    @field_validator("vacuum_amplitudes")
    @classmethod
    def _check_amplitudes(cls, value: List[ComplexPair]) -> List[ComplexPair]:
        for pair in value:
            _check_pair(pair)
        return value


class CoinSpec(BaseModel):
    """An explicit 2x2 coin given as a file."""

    name: Optional[str] = None
    matrix: MatrixRows


class StateSpec(BaseModel):
    """An explicit carrier density matrix given as a file."""

    name: Optional[str] = None
    matrix: MatrixRows


# Default coins when --coin is not given: the walk uses Hadamard, the hop channel X
WALK_COIN = "H"
HOP_COIN = "X"


class Scenario(str, Enum):
    SWITCH_EQUIV = "switch-equiv"
    SPATIAL_RUN = "spatial-run"
    SWITCH_RUN = "switch-run"
    WALK_HYBRID = "walk-hybrid"
    EB_DEMO = "eb-demo"
    DTQW = "dtqw"
    SWEEP = "sweep"


class SweepFamily(str, Enum):
    UNITARY = "unitary"
    RANDOM_CHANNEL = "random-channel"


class ScenarioConfig(BaseModel):
    """Fully resolved CLI configuration; embedded verbatim in every report."""

    scenario: Scenario
    channel_e: Optional[str] = Field(None, description="Path to channel / extension spec for E")
    channel_d: Optional[str] = Field(None, description="Path to channel / extension spec for D")
    coin: str = Field(None, description="Named coin (I | X | H) or path to a coin spec; H for dtqw, X otherwise")
    carrier: str = Field("zero", description="Named state (zero | one | plus | minus | mixed) or path to a state spec")
    control: str = Field("plus", description="Named control state for run scenarios")
    hops: int = Field(2, ge=0)
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED)
    tolerance: float = Field(default_factory=lambda: settings.EQUIVALENCE_TOLERANCE, gt=0)
    output_path: Optional[str] = None
    expect_equivalent: bool = False

    # dtqw
    steps: int = Field(3, ge=0)
    coin_state: str = Field("0", description="Initial walk coin: 0 | 1 | balanced")

    # sweep
    trials: int = Field(default_factory=lambda: settings.SWEEP_TRIALS, ge=0)
    dim: int = Field(2, ge=1)
    family: SweepFamily = SweepFamily.UNITARY
    kraus_count: int = Field(2, ge=1)

    # eb-demo
    search_corrections: bool = False

    @model_validator(mode="before")
    @classmethod
    def _default_coin(cls, data):
        if isinstance(data, dict) and data.get("coin") is None:
            scenario = getattr(data.get("scenario"), "value", data.get("scenario"))
            data = {**data, "coin": WALK_COIN if scenario == Scenario.DTQW.value else HOP_COIN}
        return data

    @field_validator("tolerance")
    @classmethod
    def _finite_tolerance(cls, value: float) -> float:
        if value != value or value == float("inf"):
            raise ValueError("tolerance must be finite")
        return value
