#!/usr/bin/env python3
import argparse
import logging
import sys
from typing import List, Optional

from catkit import __version__
from catkit.commands import EXIT_PRECONDITION, EXIT_USAGE, Command
from catkit.config import OUTPUT_FORMATS, Config
from catkit.errors import (
    ConfigError,
    GuardExceededError,
    PreconditionError,
    UsageError,
)

logger = logging.getLogger(__name__)

BIJECTIONS = ("syt-dyck", "zeta", "pad", "theta", "tau", "walk-dyck", "syt-class")
SUITES = ("all", "counts", "bijections", "game")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catkit",
        description="Count, enumerate and cross-check Catalan-type objects.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--config",
        metavar="PATH",
        help="YAML config file (default: $CATKIT_CONFIG, else built-in defaults)",
    )

    # Options shared by every printing command
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="output format")

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--n", help="n, or an inclusive range a..b where allowed")
    params.add_argument("--d", type=int, help="row length difference d")
    params.add_argument("--k", type=int, help="leading part of the split")
    params.add_argument("--p", type=int, help="trailing part of the split")
    params.add_argument("--r", type=int, help="score threshold")
    params.add_argument("--family", help="permutation family, T7 to T11")

    subparsers = parser.add_subparsers(dest="command", required=True)

    count = subparsers.add_parser(
        "count", parents=[common, params], help="closed-form class sizes"
    )
    count.add_argument("object", choices=("dyck", "syt", "pattern", "game"))

    enumerate_ = subparsers.add_parser(
        "enumerate", parents=[common, params], help="list every object of a class"
    )
    enumerate_.add_argument("object", choices=("dyck", "syt", "pattern", "deck"))
    enumerate_.add_argument(
        "--max-n", type=int, help="override the resource guard for this call"
    )

    map_ = subparsers.add_parser(
        "map", parents=[common, params], help="apply a bijection to one object"
    )
    map_.add_argument("bijection", choices=BIJECTIONS)
    map_.add_argument("input", help="path, tableau, permutation or deck in text form")
    map_.add_argument("--inverse", action="store_true", help="apply the inverse map")
    map_.add_argument("--b", type=int, help="split value for the inverse of theta or tau")

    verify = subparsers.add_parser(
        "verify", parents=[common], help="run exhaustive verification suites"
    )
    verify.add_argument("suite", nargs="?", default="all", choices=SUITES)
    verify.add_argument("--max-n", type=int, help="largest n for exhaustive checks")

    game = subparsers.add_parser(
        "game", parents=[common], help="expected scores of the threshold strategies"
    )
    group = game.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", help="deck with n red and n black cards")
    group.add_argument("--scan", type=int, metavar="N", help="best threshold for 1..N")

    draw = subparsers.add_parser(
        "draw", parents=[common], help="draw a path, tableau or deck as text"
    )
    draw.add_argument("object", choices=("path", "tableau", "deck"))
    draw.add_argument("input")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse the command line, run the command and return its exit code."""
    parser = build_parser()
    # argparse exits with status 2 on malformed command lines
    args = parser.parse_args(argv)

    try:
        # Read the parsed config file and create a Config object
        config = Config(args.config)
    except ConfigError as e:
        print(f"catkit: config error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return Command(config, args).process()
    except PreconditionError as e:
        logger.debug("Precondition failed", exc_info=True)
        print(f"catkit: precondition violated: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (UsageError, GuardExceededError) as e:
        print(f"catkit: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())
