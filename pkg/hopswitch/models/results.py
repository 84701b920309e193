"""Pydantic models for verdicts and aggregate results."""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, computed_field


class EquivalenceReport(BaseModel):
    """Walk-vs-switch verdict; `equivalent` is derived, never set by hand."""

    distance: float = Field(..., ge=0.0, description="Trace distance between two-hop output and switch output")
    tolerance: float = Field(..., gt=0.0)
    hop_count: int = Field(2, ge=0)
    probes: int = Field(1, ge=1, description="Number of carrier states the distance was maximized over")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def equivalent(self) -> bool:
        return self.distance <= self.tolerance


class CrossTermReport(BaseModel):
    """Amplitude-side check that only s=l, j=m cross terms survive two hops."""

    holds: bool
    violating_tuples: List[Tuple[int, int, int, int]] = Field(default_factory=list)


class CorrectionReport(BaseModel):
    """Trace distance to the target after applying each outcome's correction."""

    per_outcome: Dict[str, Optional[float]] = Field(
        ..., description="None for zero-probability outcomes, which need no correction"
    )
    corrections: Dict[str, str] = Field(default_factory=dict, description="Label of the correction used per outcome")
    worst_case: float


class SweepTrial(BaseModel):
    index: int
    seed: int
    distance: float


class SweepSummary(BaseModel):
    family: str
    dim: int
    trials: List[SweepTrial] = Field(default_factory=list)
    max_distance: Optional[float] = None
    mean_distance: Optional[float] = None
    tolerance: float

    @computed_field  # type: ignore[prop-decorator]
    @property
    def equivalent(self) -> bool:
        return self.max_distance is None or self.max_distance <= self.tolerance
