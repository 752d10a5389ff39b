"""
Entry point module for the skewlcp command line.

This module wires up configuration, logging and metrics, then dispatches to
the command bodies in `cli.commands`.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mode", choices=["fast", "audit"], default=None, help="LCP criteria to evaluate")
    parser.add_argument(
        "--method", choices=["exhaustive", "columns", "declared"], default=None, help="Minimum-distance engine"
    )
    parser.add_argument("--budget", type=int, default=None, help="Work budget for the distance engine")
    parser.add_argument("--seed", type=int, default=None, help="Seed for randomized searches")
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument("--out", type=str, default=None, help="Write the JSON report here instead of stdout")
    parser.add_argument("--metrics", type=str, default=None, help="Write Prometheus metrics to this file")
    parser.add_argument("--slow", action="store_true", default=None, help="Also evaluate slow claims")
    parser.add_argument("--log-level", type=str, default=None)


def build_parser() -> argparse.ArgumentParser:
    from .cli.fixtures import example_names

    p = argparse.ArgumentParser(prog="skewlcp", description="LCPs of skew constacyclic codes")
    sub = p.add_subparsers(dest="cmd", required=True)

    for name, help_text in (
        ("check", "Decide whether the task's (C, D) is an LCP and report its security parameter"),
        ("search", "Test every group image of the seed as a supplement of C"),
        ("distance", "Minimum distance of the task's code"),
        ("run", "Evaluate every claim in the manifest's expect block"),
    ):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("manifest", type=str, help="Path to a JSON manifest")
        _common(sp)

    pr = sub.add_parser("reproduce", help="Evaluate a built-in worked example")
    pr.add_argument("example", choices=example_names())
    _common(pr)

    pe = sub.add_parser("export", help="Write a built-in worked example as a manifest")
    pe.add_argument("example", choices=example_names())
    pe.add_argument("--out", type=str, default=None)

    return p


def main(argv: Optional[list[str]] = None) -> int:
    from .cli import commands
    from .cli.manifest import Manifest
    from .metrics.registry import write_metrics
    from .runtime.config import AppConfig
    from .runtime.logging_setup import setup_logging

    args = build_parser().parse_args(argv)
    if args.cmd == "export":
        return commands.run_command(commands.cmd_export, args.example, args.out)

    base = AppConfig.from_env()
    budget_field = "exhaustive_budget" if (args.method or base.method) == "exhaustive" else "column_budget"
    config = base.with_overrides(
        mode=args.mode,
        method=args.method,
        seed=args.seed,
        threads=args.threads,
        slow=args.slow,
        log_level=args.log_level,
        **{budget_field: args.budget},
    )
    setup_logging(config)
    logger = logging.getLogger("skewlcp")
    logger.info("starting skewlcp", extra={"command": args.cmd, "mode": config.mode, "method": config.method})

    if args.cmd == "reproduce":
        code = commands.run_command(commands.cmd_reproduce, args.example, config, args.out)
    else:
        body = {
            "check": commands.cmd_check,
            "search": commands.cmd_search,
            "distance": commands.cmd_distance,
            "run": commands.cmd_run,
        }[args.cmd]
        code = commands.run_command(lambda: body(Manifest.load(args.manifest), config, args.out))

    if args.metrics:
        write_metrics(args.metrics)
    logger.info("finished", extra={"command": args.cmd, "exit_code": code})
    return code


if __name__ == "__main__":
    sys.exit(main())
