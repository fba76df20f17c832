# framekit/cli/main.py
"""
framekit <command> <frame-file> [flags]

Reports go to stdout as JSON; logs go to stderr.
Exit codes: 0 success, 1 analysis failure, 2 unreadable input.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

import config as cfg
from framekit.cli import commands
from framekit.core.errors import FrameFileError, FramekitError, StructuralError
from framekit.io.serialize import dumps
from framekit.util.logging_setup import init_logging

log = logging.getLogger("framekit.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2

_COMMANDS: Dict[str, Callable[[argparse.Namespace], commands.Outcome]] = {
    "validate": commands.cmd_validate,
    "excess": commands.cmd_excess,
    "minnorm": commands.cmd_minnorm,
    "kernel": commands.cmd_kernel,
    "c0": commands.cmd_c0,
    "hilbert": commands.cmd_hilbert,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framekit",
        description="Analyse finite truncations of Schauder frames.",
    )
    parser.add_argument("--log-level", default=None, help="debug, info, warning or error (default: FRAMEKIT_LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("path", metavar="frame-file", help="JSON frame file")
        return p

    p = add("validate", "check the reconstruction identity")
    p.add_argument("--tol", type=float, default=None, help="residual tolerance (default: FRAMEKIT_VALIDATION_TOL)")

    add("excess", "kernel dimension and deletion excess")

    p = add("minnorm", "min-norm of a coefficient sequence")
    p.add_argument("--coeffs", default=None, help='comma separated reals, e.g. --coeffs="-1,1,0"')
    p.add_argument("--coeffs-file", default=None, help="file holding the coefficients")
    p.add_argument("--tail-profile", action="store_true", help="also report the tail profile")

    p = add("kernel", "basis of the kernel of the reconstruction operator")
    p.add_argument("--method", choices=("numerical", "biorthogonal", "both"), default="numerical")
    p.add_argument("--sigma", default=None, help="0-based deletion set for biorthogonal, e.g. 1,3")

    p = add("c0", "c0-equivalence constants of a block sequence")
    p.add_argument("--blocks", choices=("example", "auto", "file"), default="auto")
    p.add_argument("--blocks-path", default=None, help="JSON K x N block rows (with --blocks file)")
    p.add_argument("--resolution", type=int, default=None, help="face grid resolution (default: FRAMEKIT_C0_RESOLUTION)")

    add("hilbert", "frame bounds, excess and Besselian constant of a Hilbert frame")
    return parser


def parse_options(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = parse_options(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors, 0 on --help
        return int(e.code or 0)

    init_logging(args.log_level or cfg.settings.log_level)
    handler = _COMMANDS[args.command]
    try:
        report, code = handler(args)
    except (FrameFileError, StructuralError) as e:
        log.error("%s: %s", args.command, e)
        return EXIT_BAD_INPUT
    except FramekitError as e:
        log.error("%s: %s", args.command, e)
        return EXIT_FAILED

    sys.stdout.write(dumps(report))
    for w in report.warnings:
        log.warning("%s: %s", args.command, w)
    return code


if __name__ == "__main__":
    sys.exit(main())
