import logging
import sys
from typing import Optional, Sequence

from ..exceptions import RESOURCE_ERRORS, KOrbitError
from .commands import HANDLERS
from .config import CliConfig
from .parser import USAGE_EXIT, build_parser

logger = logging.getLogger(__name__)

RESOURCE_EXIT = 2

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def configure_logging(verbose: int) -> None:
    logging.basicConfig(
        level=LOG_LEVELS[min(verbose, len(LOG_LEVELS) - 1)],
        format="%(asctime)s %(name)s %(levelname)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one korbit subcommand and return its exit code.

    0 on success, 1 on usage errors, 2 when a resource cap is hit and 3 when
    --strict is set and the written report holds a FAIL or REFUTED row.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return int(stop.code or 0)
    try:
        config = CliConfig.from_args(args)
    except AssertionError as error:
        parser.print_usage(sys.stderr)
        print(f"korbit: error: {error}", file=sys.stderr)
        return USAGE_EXIT
    configure_logging(config.verbose)
    try:
        return HANDLERS[config.command](config)
    except RESOURCE_ERRORS as error:
        logger.error("resource cap hit: %s", error)
        return RESOURCE_EXIT
    except (KOrbitError, KeyError, OSError) as error:
        print(f"korbit: error: {error}", file=sys.stderr)
        return USAGE_EXIT
