"""
Argument parsing for `siegel`.

Defaults that come from the settings are resolved here, so the command
functions only ever see concrete values.
"""
import argparse
from pathlib import Path

from src.config.settings import settings


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected >= 1, got {number}")
    return number


def build_parser() -> argparse.ArgumentParser:
    """Builds the parser with one subcommand per use case."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tol",
        type=float,
        default=None,
        help="set sym_tol, psd_tol and eq_tol to one value in (0, 1e-3]",
    )
    common.add_argument(
        "--log-level",
        default=None,
        help=f"logging level (default {settings.LOG_LEVEL})",
    )

    parser = argparse.ArgumentParser(
        prog="siegel",
        description=(
            "Symplectic actions on the Siegel upper half space and the "
            "Finsler distance on it."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser(
        "check",
        parents=[common],
        help="symplectic, antisymplectic or neither",
    )
    check.add_argument("s", type=Path, help="symplectic document")

    classify = commands.add_parser(
        "classify",
        parents=[common],
        help="sufficient conditions for Phi_S to be well defined",
    )
    classify.add_argument("s", type=Path, help="symplectic document")

    act = commands.add_parser(
        "act", parents=[common], help="evaluate Phi_S(Z)"
    )
    act.add_argument("s", type=Path, help="symplectic document")
    act.add_argument("z", type=Path, help="siegel_point document")
    act.add_argument(
        "--out", type=Path, default=None, help="also write the image here"
    )

    dist = commands.add_parser(
        "dist", parents=[common], help="distance between two points"
    )
    dist.add_argument("z1", type=Path)
    dist.add_argument("z2", type=Path)
    dist.add_argument(
        "--lower",
        action="store_true",
        help="the points lie in the lower space",
    )
    dist.add_argument(
        "--path",
        type=_positive,
        default=None,
        metavar="K",
        help="also measure the straight path with K steps",
    )

    propcheck = commands.add_parser(
        "propcheck", parents=[common], help="run a seeded property suite"
    )
    propcheck.add_argument("suite")
    propcheck.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    propcheck.add_argument(
        "--trials", type=int, default=settings.DEFAULT_TRIALS
    )
    propcheck.add_argument("--n", type=int, default=None)
    propcheck.add_argument(
        "--workers", type=int, default=settings.SUITE_WORKERS
    )
    propcheck.add_argument(
        "--json",
        dest="json_path",
        type=Path,
        default=None,
        help="write the report here",
    )

    commands.add_parser(
        "suites", parents=[common], help="list the property suites"
    )
    return parser
