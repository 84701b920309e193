"""
Report assembly and export.

Every run produces one JSON ScenarioReport (scenario, resolved config, results,
verdict) and, for walks, a position,probability CSV.  Complex matrices inside
results are encoded as [re, im] pairs so reports diff cleanly.
"""

import csv
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Tuple

from hopswitch.config import settings
from hopswitch.models.common import ErrorDetail, ScenarioOutcome, ScenarioReport
from hopswitch.models.specs import ScenarioConfig
from hopswitch.quantum.numerics import ComplexMatrix
from hopswitch.quantum.supermaps import JointState, carrier_marginal, control_block, control_marginal
from hopswitch.utils.serialization import encode_matrix

logger = logging.getLogger(__name__)

# Decimal places kept for probabilities and distances in reports
REPORT_PRECISION = 12


def rounded(value: float) -> float:
    # +0.0 folds -0.0 into 0.0
    return round(float(value), REPORT_PRECISION) + 0.0


def encode_operator(m: ComplexMatrix) -> list:
    return encode_matrix(m.round(REPORT_PRECISION))


def describe_joint_state(js: JointState) -> Dict[str, Any]:
    """Joint matrix, both marginals and the four control blocks."""
    return {
        "carrier_dim": js.carrier_dim,
        "joint": encode_operator(js.matrix),
        "carrier_marginal": encode_operator(carrier_marginal(js).matrix),
        "control_marginal": encode_operator(control_marginal(js).matrix),
        "control_blocks": {
            f"{row}{col}": encode_operator(control_block(js, row, col)) for row in (0, 1) for col in (0, 1)
        },
    }


def default_output_path(cfg: ScenarioConfig) -> Path:
    return Path(settings.OUTPUT_DIR) / f"{cfg.scenario.value}-seed{cfg.seed}.json"


def build_report(
    cfg: ScenarioConfig,
    outcome: Optional[ScenarioOutcome] = None,
    error: Optional[ErrorDetail] = None,
) -> ScenarioReport:
    return ScenarioReport(
        scenario=cfg.scenario.value,
        config=cfg,
        results=outcome.results if outcome else {},
        verdict="error" if error else (outcome.verdict if outcome else None),
        error=error,
        generated_at=datetime.now(timezone.utc).isoformat(),
    )


def write_report(report: ScenarioReport, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.info("Report written to %s", path)
    return path


def write_distribution_csv(rows: Iterable[Tuple[int, float]], path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["position", "probability"])
        for position, probability in rows:
            writer.writerow([position, repr(rounded(probability))])
    logger.info("Distribution written to %s", path)
    return path
