import logging
import re
from pathlib import Path
from typing import Callable, Dict, List, Tuple

from ..calculus import coherence, orb_k, write_korb
from ..catalog import (
    Catalog,
    CatalogEntry,
    build_catalog,
    compute_tags,
    entry_from_graph,
    load_catalog,
    save_catalog,
)
from ..closure import import_graph, two_closure
from ..exceptions import UnknownGroupError
from ..group import PermutationGroup, read_group_file
from ..lab import CHECKS, run_suite
from ..regular import (
    SurveyStatus,
    find_regular,
    polycirculant_survey,
    survey_summary,
)
from .config import CliConfig

logger = logging.getLogger(__name__)

OK = 0
STRICT_EXIT = 3

_GROUP_ID = re.compile(r"^.+@(\d+)$")


def catalog_entries(config: CliConfig, max_degree: int) -> Catalog:
    """Entries of degree <= `max_degree`, read from --catalog or built."""
    if config.catalog is not None:
        return load_catalog(config.catalog, config.caps.element_cap).by_degree(
            max_degree
        )
    return build_catalog(
        max_exhaustive_degree=min(config.max_exhaustive_degree, max_degree),
        families=config.families,
        caps=config.caps,
        max_family_degree=max_degree,
        progress=config.progress,
    )


def resolve_group(reference: str, config: CliConfig) -> Tuple[str, PermutationGroup]:
    """A group from a ".grp" path or a catalog id such as "A4@4"."""
    path = Path(reference)
    if path.suffix == ".grp" or path.is_file():
        return path.stem, read_group_file(path, config.caps.element_cap)
    match = _GROUP_ID.match(reference)
    if match is None:
        raise UnknownGroupError(f"{reference!r} is neither a .grp file nor NAME@n")
    if config.catalog is not None:
        catalog = load_catalog(config.catalog, config.caps.element_cap)
    else:
        degree = int(match.group(1))
        exhaustive = degree if degree <= config.max_exhaustive_degree else 0
        catalog = build_catalog(
            max_exhaustive_degree=exhaustive,
            families=config.families,
            caps=config.caps,
            max_family_degree=degree,
            min_degree=degree,
        )
    return reference, catalog.find(reference).group(config.caps.element_cap)


def catalog_build(config: CliConfig) -> int:
    catalog = build_catalog(
        max_exhaustive_degree=min(config.max_exhaustive_degree, config.max_degree),
        families=config.families,
        caps=config.caps,
        max_family_degree=config.max_degree,
        progress=config.progress,
    )
    if config.tags:
        for entry in catalog:
            compute_tags(entry, config.caps)
    if config.max_degree > config.max_exhaustive_degree:
        logger.warning(
            "degrees %d..%d hold named families only",
            config.max_exhaustive_degree + 1,
            config.max_degree,
        )
    path = config.output or Path("catalog.jsonl")
    save_catalog(catalog, path)
    print(f"{len(catalog)} entries written to {path}")
    return OK


def catalog_list(config: CliConfig) -> int:
    frame = catalog_entries(config, config.max_degree).to_frame()
    print(frame.to_string(index=False))
    return OK


def korbit_compute(config: CliConfig) -> int:
    assert config.group is not None and config.k is not None
    group_id, G = resolve_group(config.group, config)
    orbits = orb_k(G, config.k, config.caps.tuple_cap, config.progress)
    directory = config.output or Path(".")
    directory.mkdir(parents=True, exist_ok=True)
    stem = group_id.replace("@", "_")
    for index, X in enumerate(orbits, 1):
        path = directory / f"{stem}.k{config.k}.{index}.korb"
        write_korb(X, path)
        verdict = coherence(X)
        print(f"{path.name}\tsize={len(X)}\t{verdict.kind.value}")
    print(f"{len(orbits)} {config.k}-orbits of {group_id} (order {G.order})")
    return OK


def closure_two(config: CliConfig) -> int:
    assert config.group is not None
    _, G = resolve_group(config.group, config)
    closure = two_closure(G, config.caps.engine_cap, config.caps.element_cap)
    print(f"order {closure.order}")
    print(f"2-closed: {'true' if closure.order == G.order else 'false'}")
    return OK


def lemmas_run(config: CliConfig) -> int:
    checks = config.checks or tuple(CHECKS)
    checks = tuple(c if c.startswith("CHK-") else f"CHK-{c}" for c in checks)
    report = run_suite(
        catalog_entries(config, config.max_degree),
        checks,
        config.lab_config(),
        path=config.output or Path("lemmas.jsonl"),
        parallelism=config.parallelism,
        progress=config.progress,
    )
    print(report.summary.to_string())
    if config.strict and report.has_failures():
        return STRICT_EXIT
    return OK


def polycirc_survey(config: CliConfig) -> int:
    rows = polycirculant_survey(
        catalog_entries(config, config.max_degree),
        config.survey_options(),
        path=config.output or Path("survey.jsonl"),
    )
    summary = survey_summary(rows)
    print(summary.to_string())
    if config.strict and summary[SurveyStatus.REFUTED.value] > 0:
        return STRICT_EXIT
    return OK


def graph_import(config: CliConfig) -> int:
    assert config.graph is not None
    digraph = import_graph(config.graph.read_bytes())
    name = config.name or config.graph.stem
    entry = entry_from_graph(name, digraph, config.caps)
    G = entry.group(config.caps.element_cap)
    transitive = G.is_transitive()
    print(f"{entry.id}: order {G.order}")
    print(f"vertex-transitive: {'true' if transitive else 'false'}")
    if transitive:
        found = find_regular(G, group_id=entry.id)
        if found.witness is not None:
            order = found.witness.order()
            print(
                f"semiregular element of order {order} "
                f"({G.degree // order} cycles): {found.witness}"
            )
        else:
            print("no semiregular element")
    if config.catalog is not None:
        entries: List[CatalogEntry] = []
        if config.catalog.exists():
            entries = list(load_catalog(config.catalog, config.caps.element_cap))
        entries = [e for e in entries if e.id != entry.id] + [entry]
        save_catalog(entries, config.catalog)
        logger.info("%s added to %s", entry.id, config.catalog)
    return OK


HANDLERS: Dict[str, Callable[[CliConfig], int]] = {
    "catalog build": catalog_build,
    "catalog list": catalog_list,
    "korbit compute": korbit_compute,
    "closure two": closure_two,
    "lemmas run": lemmas_run,
    "polycirc survey": polycirc_survey,
    "graph import": graph_import,
}
