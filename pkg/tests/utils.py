# Utility functions to make testing easier
import io
from typing import List, Tuple
from unittest.mock import Mock

from catkit.commands import Command
from catkit.main import build_parser


def make_config(**overrides) -> Mock:
    """A stand-in for catkit.config.Config holding the default option values"""
    config = Mock()
    config.max_n_paths = 10
    config.max_n_permutations = 9
    config.max_n_decks = 9
    config.output_format = "text"
    config.report_until = 60
    for name, value in overrides.items():
        setattr(config, name, value)
    return config


def run_command(argv: List[str], config: Mock = None) -> Tuple[int, str]:
    """Parse a command line, run it and return the exit code and everything printed"""
    args = build_parser().parse_args(argv)
    out = io.StringIO()
    code = Command(config or make_config(), args, out=out).process()
    return code, out.getvalue()
