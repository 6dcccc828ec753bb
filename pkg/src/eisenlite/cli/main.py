import argparse
import logging
import sys
from typing import List, Optional

from ..enums import CharKind, EType, OutputFormat, Parabolic
from ..logger import get_logger, set_log_level
from .commands import run
from .config import COMMANDS, SUITE_ALIASES, SUITES, RunConfig, load_config_file, rational_arg

_HELP = {
    "sigma": "List the Weyl elements whose GK factor has a pole of order >= --min-order",
    "classes": "Partition the sigma-set into equivalence classes",
    "gk": "Gindikin-Karpelevich factor of --word, optionally after --after",
    "twist": "Render w^-1 . chi_s for --word",
    "pole-order": "Pole order of the Heisenberg Eisenstein series at --s0",
    "residue": "Enumerate dotted place sets from --profiles and decide appearance",
    "jacquet": "Multiplicity of a character in the Jacquet module",
    "verify": "Recompute the stored tables and constants",
}


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--algebra", dest="etype", choices=[e.value for e in EType], help="Etale cubic algebra E")
    parser.add_argument("--char", choices=[c.value for c in CharKind], help="Character chi")
    parser.add_argument("--s0", type=rational_arg, help="Evaluation point, e.g. 1/2")
    parser.add_argument("--parabolic", choices=[p.value for p in Parabolic])
    parser.add_argument("--min-order", dest="min_order", type=int)
    parser.add_argument("--word", help="Weyl word such as 212 or w212")
    parser.add_argument("--after", help="Twist chi_s by this word first")
    parser.add_argument("--profiles", help="JSON file of place profiles")
    parser.add_argument("--bound", type=int, help="Largest dotted set size")
    parser.add_argument("--processes", type=int, help="Worker processes for enumeration")
    parser.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat])
    parser.add_argument("--verbose", action="store_true", default=None, help="Debug logging and progress bars")
    parser.add_argument("--config", help="JSON file of defaults; flags override it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eisenlite",
        description="Pole and residue analysis of degenerate Eisenstein series on quasi-split Spin(8).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        child = sub.add_parser(command, help=_HELP[command])
        if command == "verify":
            child.add_argument("suite", choices=SUITES + tuple(SUITE_ALIASES))
        _common(child)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point of the ``eisenlite`` script.

    Returns:
        0 on success, 1 on a verification mismatch, 2 on invalid input
    """
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_log_level(logging.DEBUG)
    try:
        defaults = load_config_file(args.config) if args.config else None
        config = RunConfig.from_args(args, defaults)
        result = run(config)
    except (ValueError, OSError) as exc:
        get_logger().debug("command failed", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(result.render(config.output_format))
    return result.status


if __name__ == "__main__":
    sys.exit(main())
