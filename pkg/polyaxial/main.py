import argparse
import json
import logging
import sys
from typing import List, Optional

from polyaxial.commands import norm, solve, transform, verify
from polyaxial.commands.reporting import Report, require_pass, write_report
from polyaxial.config import setup_logging
from polyaxial.exceptions import PolyaxialError
from polyaxial.oracle import load_table, regenerate_table
from polyaxial.schemas import RunConfig, config_schema, load_config
from polyaxial.suites import SUITE_NAMES

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyaxial",
        description="Fourier–Bessel transforms, Sobolev norms and spectral solves for the poly-axial Laplacian.",
    )
    parser.add_argument("--log-level", default=None, help="overrides POLYAXIAL_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_run_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", required=True, help="RunConfig JSON document")
        p.add_argument("--out", default=None, help="report path; stdout when omitted")
        p.add_argument("--format", choices=["json", "csv"], default=None)

    add_run_options(sub.add_parser("transform", help="forward transform with Plancherel and inversion defects"))
    add_run_options(sub.add_parser("norm", help="E^{s,p} norms, s-sweep and Dirac membership table"))
    add_run_options(sub.add_parser("solve", help="P(−Δ_α)u = f with a regularity report"))
    verify_parser = sub.add_parser("verify", help="run verification suites")
    add_run_options(verify_parser)
    verify_parser.add_argument("--suite", choices=SUITE_NAMES, default="all")
    verify_parser.add_argument("--regen-oracle", action="store_true", help="recompute the oracle table first")
    sub.add_parser("schema", help="print the RunConfig JSON schema")
    return parser


def dispatch(args: argparse.Namespace, config: RunConfig) -> Report:
    if args.command == "transform":
        return transform.run(config)
    if args.command == "norm":
        return norm.run(config)
    if args.command == "solve":
        return solve.run(config)
    if args.regen_oracle:
        regenerate_table(config)
    return verify.run(config, args.suite, load_table())


def main(argv: Optional[List[str]] = None) -> int:
    """CLI entry; returns 0 on pass, 1 on tolerance failure, 2 on bad input, 3 on overflow."""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    try:
        if args.command == "schema":
            sys.stdout.write(json.dumps(config_schema(), indent=2, ensure_ascii=False) + "\n")
            return 0
        config = load_config(args.config)
        report = dispatch(args, config)
        write_report(report, args.out or config.output.path, args.format or config.output.format)
        require_pass(report)
        return 0
    except PolyaxialError as e:
        logger.error(f"{type(e).__name__}: {e.detail}")
        return e.exit_code
    except Exception as e:
        logger.exception(f"Unexpected failure: {str(e)}")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
