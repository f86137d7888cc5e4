#!/usr/bin/env python3
"""
Command-line front end.

Examples:
    python -m cli_app gen generic --n 2 --output job.json
    python -m cli_app charpoly job.json
    python -m cli_app verify thm31 job.json --json
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Callable, Dict, Optional, Sequence, TextIO

import project_paths

project_paths.ensure_project_root()

from ring_core.errors import NcchError
from cli_app import commands
from cli_app.commands import EXIT_INPUT, CommandOutput
from cli_app.settings import Settings, load_settings

logger = logging.getLogger(__name__)

HANDLERS: Dict[str, Callable[[argparse.Namespace, Settings], CommandOutput]] = {
    "charpoly": commands.cmd_charpoly,
    "preadjoint": commands.cmd_preadjoint,
    "decompose": commands.cmd_decompose,
    "verify": commands.cmd_verify,
    "oracle": commands.cmd_oracle,
    "ideal-membership": commands.cmd_ideal_membership,
    "gen": commands.cmd_gen,
    "identities": commands.cmd_identities,
    "search-witness": commands.cmd_search_witness,
    "debug": commands.cmd_perturb_lambda,
}


def _add_ring_args(p: argparse.ArgumentParser, default: Optional[str] = None) -> None:
    p.add_argument("--ring", choices=commands.ring_choices(), default=default, required=default is None)
    p.add_argument("--generators", type=int, default=None, help="Generator count for rings that have generators.")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ncch",
        description="Preadjoints, symmetric characteristic polynomials and Cayley-Hamilton checks over noncommutative rings.",
    )
    p.add_argument("--json", action="store_true", help="Emit a machine-readable JSON report.")
    p.add_argument("--timings", action="store_true", help="Include wall time in the output.")
    p.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging.")
    p.add_argument("--max-n", type=int, default=None, help="Warn above this n (overrides NCCH_MAX_N).")
    sub = p.add_subparsers(dest="command", required=True)

    for name, text in (
        ("charpoly", "Print lambda_0..lambda_n of sdet(xI - A)."),
        ("preadjoint", "Print the preadjoint A*."),
        ("decompose", "Print lambda_i, C_i and D_i."),
        ("ideal-membership", "Certify the sandwich residual of a free-algebra job."),
    ):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("file", type=Path)

    sp = sub.add_parser("verify", help="Run one verifier on a job file.")
    sp.add_argument("claim", choices=sorted(commands.VERIFIERS))
    sp.add_argument("file", type=Path)

    sp = sub.add_parser("oracle", help="Cross-check against sympy determinants over a commutative ring.")
    sp.add_argument("kind", choices=["commutative"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    _add_ring_args(sp, default="commutative-poly")

    sp = sub.add_parser("gen", help="Emit a job file.")
    sp.add_argument("kind", choices=["generic", "random"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--prefix", default="x", help="Generator prefix for generic jobs.")
    sp.add_argument("--output", type=Path, default=None, help="Write here instead of stdout.")
    _add_ring_args(sp, default="free-algebra")

    sp = sub.add_parser("identities", help="Search for witnesses against the named ring identities.")
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    _add_ring_args(sp)

    sp = sub.add_parser("search-witness", help="Look for a matrix with a nonzero sandwich residual.")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trials", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    _add_ring_args(sp)

    sp = sub.add_parser("debug", help="Deliberately corrupted runs.")
    dsub = sp.add_subparsers(dest="debug_command", required=True)
    dp = dsub.add_parser("perturb-lambda", help="Shift lambda_I by one and rerun the identity check.")
    dp.add_argument("file", type=Path)
    dp.add_argument("--index", type=int, required=True)
    return p


def configure_logging(verbosity: int, default_level: str) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, default_level, logging.WARNING)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _write(out: TextIO, result: CommandOutput, as_json: bool, elapsed: Optional[float]) -> None:
    if as_json:
        payload = dict(result.payload)
        payload["exit_code"] = result.exit_code
        if elapsed is not None:
            payload["elapsed_s"] = round(elapsed, 6)
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
        return
    for line in result.lines:
        out.write(line + "\n")
    if elapsed is not None:
        out.write(f"elapsed: {elapsed:.3f}s\n")


def run_command(argv: Sequence[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None,
                settings: Optional[Settings] = None) -> int:
    """Parse ``argv``, run one subcommand and return its exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT

    settings = settings or load_settings()
    if args.max_n is not None:
        settings = Settings(args.max_n, settings.grassmann_generators, settings.log_level,
                            settings.enable_n3_certification)
    configure_logging(args.verbose, settings.log_level)

    start = time.perf_counter()
    try:
        result = HANDLERS[args.command](args, settings)
    except NcchError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    elapsed = time.perf_counter() - start if args.timings else None
    _write(out, result, args.json, elapsed)
    logger.info("%s finished with exit code %d", args.command, result.exit_code)
    return result.exit_code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
