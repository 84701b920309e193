"""
Shared report models.

ScenarioReport is the envelope every CLI run writes.  It embeds the resolved
config so a report can be reproduced from itself; `generated_at` is the only
field that is allowed to differ between two runs with the same seed.
"""

from __future__ import annotations

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from hopswitch.models.specs import ScenarioConfig


class ErrorDetail(BaseModel):
    """Structured error body so scripts can parse failures."""

    error: str
    detail: Optional[str] = None


class ScenarioReport(BaseModel):
    scenario: str
    config: ScenarioConfig
    results: Dict[str, Any] = Field(default_factory=dict)
    verdict: Optional[str] = Field(None, description="equivalent | not-equivalent | corrected | ok | error")
    error: Optional[ErrorDetail] = None
    generated_at: str = Field(..., description="UTC timestamp; excluded from the determinism contract")

    def payload(self) -> Dict[str, Any]:
        """Everything except the timestamp."""
        return self.model_dump(mode="json", exclude={"generated_at"})


class ScenarioOutcome(BaseModel):
    """What a scenario hands back before it is wrapped into a ScenarioReport."""

    results: Dict[str, Any] = Field(default_factory=dict)
    verdict: str = "ok"
    # None when the scenario makes no equivalence claim
    equivalent: Optional[bool] = None
    # position,probability rows exported alongside the JSON report
    distribution: Optional[List[Tuple[int, float]]] = None
