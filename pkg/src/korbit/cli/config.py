import argparse
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Tuple

from ..catalog import FAMILIES
from ..config import Caps, Convention, LabConfig, cache_dir_from_env
from ..regular import SurveyOptions


def default_parallelism() -> int:
    return os.cpu_count() or 1


@dataclass(frozen=True)
class CliConfig:
    """Everything one command-line invocation needs.

    Args:
        command (str): subcommand path, e.g. "catalog build".
        caps (Caps): resource caps after the --*-cap overrides.
        catalog (Optional[Path]): catalog file; None builds entries on the fly.
        output (Optional[Path]): report, catalog or .korb destination.
        group (Optional[str]): catalog id ("NAME@degree") or a ".grp" path.
        k (Optional[int]): tuple length for `korbit compute`.
        checks (Tuple[str, ...]): check ids for `lemmas run`; empty means all.
        graph (Optional[Path]): graph6 or edge-list file for `graph import`.
        name (Optional[str]): catalog name of an imported graph.
        max_degree (int): largest degree drawn from the catalog.
        max_exhaustive_degree (int): largest degree enumerated exhaustively.
        families (Tuple[str, ...]): named families built into the catalog.
        tags (bool): compute entry tags while building the catalog.
        include_identity (bool): count the identity as a regular element.
        abelian_primitive_convention (Convention): "nonabelian" or "standard".
        evaluate_conclusions (bool): lemma conclusions are evaluated.
        parallelism (int): worker processes.
        strict (bool): FAIL or REFUTED rows turn into exit code 3.
        timing (bool): record millis per lemma row.
        progress (bool): show progress bars.
        verbose (int): 0 warnings, 1 info, 2 debug.
    """

    command: str
    caps: Caps = field(default_factory=Caps)
    catalog: Optional[Path] = None
    output: Optional[Path] = None
    group: Optional[str] = None
    k: Optional[int] = None
    checks: Tuple[str, ...] = ()
    graph: Optional[Path] = None
    name: Optional[str] = None
    max_degree: int = 12
    max_exhaustive_degree: int = 6
    families: Tuple[str, ...] = FAMILIES
    tags: bool = False
    include_identity: bool = False
    abelian_primitive_convention: Convention = "nonabelian"
    evaluate_conclusions: bool = True
    parallelism: int = 1
    strict: bool = False
    timing: bool = False
    progress: bool = False
    verbose: int = 0

    def __post_init__(self) -> None:
        self.caps.validate()
        assert self.parallelism > 0, "parallelism must be larger than 0!"
        assert self.max_degree > 0, "max_degree must be larger than 0!"
        assert self.k is None or self.k > 0, "k must be larger than 0!"
        unknown = set(self.families) - set(FAMILIES)
        assert not unknown, f"unknown families {sorted(unknown)}!"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        caps = Caps().with_overrides(
            element_cap=args.element_cap,
            tuple_cap=args.tuple_cap,
            engine_cap=args.engine_cap,
            subgroup_cap=args.subgroup_cap,
            instance_cap=args.instance_cap,
        )
        checks = getattr(args, "checks", None) or ""
        families = getattr(args, "families", None) or ",".join(FAMILIES)
        return cls(
            command=f"{args.command} {args.action}",
            caps=caps,
            catalog=args.catalog,
            output=args.output,
            group=getattr(args, "group", None),
            k=getattr(args, "k", None),
            checks=tuple(c.strip() for c in checks.split(",") if c.strip()),
            graph=getattr(args, "file", None),
            name=getattr(args, "name", None),
            max_degree=getattr(args, "max_degree", 12),
            max_exhaustive_degree=args.max_exhaustive_degree,
            families=tuple(f.strip() for f in families.split(",") if f.strip()),
            tags=getattr(args, "tags", False),
            include_identity=getattr(args, "include_identity", False),
            abelian_primitive_convention=getattr(args, "convention", "nonabelian"),
            evaluate_conclusions=not getattr(args, "hypotheses_only", False),
            parallelism=args.parallelism,
            strict=args.strict,
            timing=args.timing,
            progress=args.progress,
            verbose=args.verbose,
        )

    def lab_config(self) -> LabConfig:
        return LabConfig(
            caps=self.caps,
            abelian_primitive_convention=self.abelian_primitive_convention,
            evaluate_conclusions=self.evaluate_conclusions,
            record_timing=self.timing,
            cache_dir=cache_dir_from_env(),
        )

    def survey_options(self) -> SurveyOptions:
        return SurveyOptions(
            include_identity=self.include_identity,
            caps=self.caps,
            cache_dir=cache_dir_from_env(),
            parallelism=self.parallelism,
            progress=self.progress,
        )
