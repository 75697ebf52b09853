"""
Console entrypoint of the `siegel` toolkit.

Logging is configured once, after the arguments are parsed, so that
`--log-level` can take effect.
"""
import sys

from src.adapters.cli.commands import dispatch
from src.adapters.cli.parser import build_parser
from src.config.logging import configure_logging


def main() -> None:
    args = build_parser().parse_args()
    configure_logging(args.log_level)
    sys.exit(dispatch(args))


if __name__ == "__main__":
    main()
