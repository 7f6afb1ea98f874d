import argparse
import sys
from pathlib import Path
from typing import NoReturn

from ..catalog import FAMILIES
from .config import default_parallelism

USAGE_EXIT = 1


class UsageParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with code 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be larger than 0")
    return value


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--catalog", type=Path, help="catalog JSON Lines file")
    common.add_argument("--output", "-o", type=Path, help="destination path")
    common.add_argument("--element-cap", type=positive_int)
    common.add_argument("--tuple-cap", type=positive_int)
    common.add_argument("--engine-cap", type=positive_int)
    common.add_argument("--subgroup-cap", type=positive_int)
    common.add_argument("--instance-cap", type=positive_int)
    common.add_argument(
        "--max-exhaustive-degree",
        type=int,
        default=6,
        help="catalog degrees enumerated from the subgroups of S_n",
    )
    common.add_argument(
        "--parallelism", type=positive_int, default=default_parallelism()
    )
    common.add_argument(
        "--strict", action="store_true", help="exit 3 on FAIL or REFUTED rows"
    )
    common.add_argument("--timing", action="store_true")
    common.add_argument("--progress", action="store_true")
    common.add_argument("-v", "--verbose", action="count", default=0)
    return common


def build_parser() -> UsageParser:
    common = _common_options()
    parser = UsageParser(
        prog="korbit",
        description="k-orbits, 2-closures and the polycirculant survey "
        "over small transitive permutation groups.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    catalog = commands.add_parser("catalog", help="build or list the group catalog")
    catalog_actions = catalog.add_subparsers(dest="action", required=True)
    build = catalog_actions.add_parser("build", parents=[common])
    build.add_argument("--max-degree", type=positive_int, default=12)
    build.add_argument(
        "--families", default=",".join(FAMILIES), help="comma separated families"
    )
    build.add_argument("--tags", action="store_true", help="compute entry tags")
    listing = catalog_actions.add_parser("list", parents=[common])
    listing.add_argument("--max-degree", type=positive_int, default=12)

    korbit = commands.add_parser("korbit", help="k-orbits of one group")
    korbit_actions = korbit.add_subparsers(dest="action", required=True)
    compute = korbit_actions.add_parser("compute", parents=[common])
    compute.add_argument("--group", required=True, help="NAME@degree or .grp path")
    compute.add_argument("--k", type=positive_int, required=True)

    closure = commands.add_parser("closure", help="2-closure of one group")
    closure_actions = closure.add_subparsers(dest="action", required=True)
    two = closure_actions.add_parser("two", parents=[common])
    two.add_argument("--group", required=True, help="NAME@degree or .grp path")

    lemmas = commands.add_parser("lemmas", help="run the lemma checks")
    lemmas_actions = lemmas.add_subparsers(dest="action", required=True)
    run = lemmas_actions.add_parser("run", parents=[common])
    run.add_argument("--checks", help="comma separated check ids (default: all)")
    run.add_argument("--max-degree", type=positive_int, default=5)
    run.add_argument(
        "--convention", choices=("nonabelian", "standard"), default="nonabelian"
    )
    run.add_argument(
        "--hypotheses-only",
        action="store_true",
        help="evaluate hypotheses and skip conclusions",
    )

    polycirc = commands.add_parser("polycirc", help="polycirculant survey")
    polycirc_actions = polycirc.add_subparsers(dest="action", required=True)
    survey = polycirc_actions.add_parser("survey", parents=[common])
    survey.add_argument("--max-degree", type=positive_int, default=6)
    survey.add_argument("--include-identity", action="store_true")

    graph = commands.add_parser("graph", help="graph automorphism groups")
    graph_actions = graph.add_subparsers(dest="action", required=True)
    load = graph_actions.add_parser("import", parents=[common])
    load.add_argument("file", type=Path, help="graph6 or edge-list file")
    load.add_argument("--name", help="catalog name (default: file stem)")
    return parser
