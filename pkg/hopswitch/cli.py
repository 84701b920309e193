"""
Command-line entry point.

    python -m hopswitch <scenario> [flags]

Each subcommand maps to one scenario in SCENARIO_MAP.  This module only
handles argument parsing, report writing and exit statuses; the experiments
themselves live in hopswitch.scenarios.

Exit statuses:
    0  success
    1  --expect-equivalent was set and the verdict is not-equivalent
    2  unreadable / malformed input (unparseable flags, missing files, schema errors)
    3  validation failure: flag values that break a config invariant (tolerance <= 0,
       negative counts) or numeric checks (CPTP, normalization, dimensions, ...)
"""

import argparse
import logging
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import ValidationError

from hopswitch.config import settings
from hopswitch.errors import ConfigurationError, SimulationError
from hopswitch.models.common import ErrorDetail, ScenarioReport
from hopswitch.models.specs import ScenarioConfig, SweepFamily
from hopswitch.scenarios import SCENARIO_MAP
from hopswitch.services.reporting import build_report, default_output_path, write_distribution_csv, write_report
from hopswitch.utils.logging import configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_PARSE_ERROR = 2
EXIT_VALIDATION_ERROR = 3

# argparse dest -> ScenarioConfig field, for flags whose names differ
_FIELD_NAMES = {"out": "output_path", "kraus": "kraus_count"}


def create_parser() -> argparse.ArgumentParser:
    """Factory that assembles the argument parser with one subcommand per scenario."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--channel-e", help="Channel or extension spec file for E")
    common.add_argument("--channel-d", help="Channel or extension spec file for D")
    common.add_argument("--coin", help="Named coin (I | X | H) or coin spec file (default: X, H for dtqw)")
    common.add_argument("--carrier", help="Named carrier state (zero | one | plus | minus | mixed) or state spec file")
    common.add_argument("--control", help="Named control state for run scenarios (default: plus)")
    common.add_argument("--hops", type=int, help="Number of hops for walk-hybrid (default: 2)")
    common.add_argument("--seed", type=int, help=f"Master random seed (default: {settings.DEFAULT_SEED})")
    common.add_argument("--tolerance", type=float, help="Trace-distance tolerance for verdicts")
    common.add_argument("--out", help="Report path (default: <OUTPUT_DIR>/<scenario>-seed<seed>.json)")
    common.add_argument("--expect-equivalent", action="store_true", default=None,
                        help="Exit with status 1 when the verdict is not-equivalent")
    common.add_argument("--trials", type=int, help="Random trials (sweep) or random states (eb-demo)")
    common.add_argument("--debug", action="store_true", help="Verbose logging")

    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description=(
            "Simulate channel superpositions, the quantum switch and the coin-augmented "
            "hop channel, and check when two hops reproduce the switch."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.APP_VERSION}")
    subparsers = parser.add_subparsers(dest="scenario", required=True)

    for name, scenario in SCENARIO_MAP.items():
        sub = subparsers.add_parser(name, parents=[common], help=scenario.description, description=scenario.description)
        if name == "dtqw":
            sub.add_argument("--steps", type=int, help="Number of walk steps (default: 3)")
            sub.add_argument("--coin-state", choices=["0", "1", "balanced"], help="Initial coin state (default: 0)")
        elif name == "sweep":
            sub.add_argument("--dim", type=int, help="Carrier dimension (default: 2)")
            sub.add_argument("--family", choices=[f.value for f in SweepFamily], help="Channel family (default: unitary)")
            sub.add_argument("--kraus", type=int, help="Kraus operators per random channel (default: 2)")
        elif name == "eb-demo":
            sub.add_argument("--search-corrections", action="store_true", default=None,
                             help="Search the Pauli group for corrections instead of {+: I, -: Y}")
    return parser


def config_from_args(args: argparse.Namespace) -> ScenarioConfig:
    """Build a ScenarioConfig from parsed flags; unset flags keep the model defaults."""
    values = {}
    for dest, value in vars(args).items():
        if value is None or dest == "debug":
            continue
        values[_FIELD_NAMES.get(dest, dest)] = value
    return ScenarioConfig(**values)


def run_scenario(cfg: ScenarioConfig) -> Tuple[int, ScenarioReport]:
    """Run one scenario, write its report (and CSV), and return the exit status."""
    scenario = SCENARIO_MAP[cfg.scenario.value]
    out_path = Path(cfg.output_path) if cfg.output_path else default_output_path(cfg)
    if out_path.suffix == ".csv":
        csv_path, out_path = out_path, out_path.with_suffix(".json")
    else:
        csv_path = out_path.with_suffix(".csv")

    logger.info("Running %s | seed=%d tolerance=%g", cfg.scenario.value, cfg.seed, cfg.tolerance)
    try:
        outcome = scenario.run(cfg)
    except SimulationError as exc:
        logger.error("Validation failed: %s", exc)
        report = build_report(cfg, error=ErrorDetail(error=type(exc).__name__, detail=str(exc)))
        write_report(report, out_path)
        return EXIT_VALIDATION_ERROR, report
    except (ConfigurationError, ValidationError, ValueError, OSError) as exc:
        logger.error("Could not read scenario inputs: %s", exc)
        report = build_report(cfg, error=ErrorDetail(error=type(exc).__name__, detail=str(exc)))
        write_report(report, out_path)
        return EXIT_PARSE_ERROR, report

    report = build_report(cfg, outcome)
    write_report(report, out_path)
    if outcome.distribution is not None:
        write_distribution_csv(outcome.distribution, csv_path)

    if cfg.expect_equivalent and outcome.equivalent is False:
        logger.warning("Expected equivalence but got verdict %s", outcome.verdict)
        return EXIT_NOT_EQUIVALENT, report
    logger.info("%s finished with verdict %s", cfg.scenario.value, outcome.verdict)
    return EXIT_OK, report


def main(argv: Optional[List[str]] = None) -> int:
    args = create_parser().parse_args(argv)
    configure_logging(debug=args.debug or settings.DEBUG)

    try:
        cfg = config_from_args(args)
    except ValidationError as exc:
        # No report: there is no valid config to embed in one
        logger.error("Invalid configuration: %s", exc)
        return EXIT_VALIDATION_ERROR

    status, _ = run_scenario(cfg)
    return status
