import logging
from math import factorial
from typing import Dict, List, Sequence, Tuple

from tqdm import tqdm

from ..closure import ColoredDigraph, aut_of_coloring
from ..config import DEFAULT_CAPS, Caps
from ..exceptions import GroupTooLargeError
from ..group import (
    PermutationGroup,
    are_conjugate,
    close_group,
    subgroups,
    symmetric_group,
)
from .entry import Catalog, CatalogEntry
from .families import FAMILIES, family_members

logger = logging.getLogger(__name__)

Named = Tuple[CatalogEntry, PermutationGroup]


def _conjugate_to_any(G: PermutationGroup, kept: Sequence[Named]) -> bool:
    return any(H.order == G.order and are_conjugate(H, G) for _, H in kept)


def named_entries(
    max_degree: int = 12,
    families: Sequence[str] = FAMILIES,
    caps: Caps = DEFAULT_CAPS,
    min_degree: int = 1,
) -> Dict[int, List[Named]]:
    """Named family members by degree, deduplicated up to conjugacy in S_n.

    Among conjugate members the family listed first in FAMILIES keeps its id.
    Members whose closure exceeds the element cap are skipped.
    """
    by_degree: Dict[int, List[Named]] = {}
    for member in family_members(max_degree, families):
        if member.degree < min_degree:
            continue
        try:
            G = close_group(member.generators, member.degree, caps.element_cap)
        except GroupTooLargeError as error:
            logger.warning("family entry %s skipped: %s", member.id, error)
            continue
        kept = by_degree.setdefault(member.degree, [])
        if _conjugate_to_any(G, kept):
            logger.debug("family entry %s duplicates an earlier entry", member.id)
            continue
        kept.append((CatalogEntry.from_group(member.id, G, "named-family"), G))
    return by_degree


def transitive_classes(
    n: int, caps: Caps = DEFAULT_CAPS
) -> List[PermutationGroup]:
    """Transitive subgroups of S_n up to conjugacy, sorted by (order, key).

    Raises:
        GroupTooLargeError: n! exceeds the subgroup or element cap.
    """
    if factorial(n) > min(caps.subgroup_cap, caps.element_cap):
        raise GroupTooLargeError(
            f"S{n} exceeds the subgroup cap {caps.subgroup_cap}",
            partial_count=0,
        )
    lattice = subgroups(symmetric_group(n, caps.element_cap), caps.subgroup_cap)
    return [H for H in lattice if H.is_transitive()]


def exhaustive_entries(
    n: int, named: Sequence[Named], caps: Caps = DEFAULT_CAPS
) -> List[CatalogEntry]:
    """One entry per transitive class of S_n.

    Classes conjugate to a named family reuse its id and generators; the
    rest are numbered T<n>.<index>@<n>.
    """
    entries = []
    index = 0
    for H in transitive_classes(n, caps):
        match = next(
            (
                (entry, G)
                for entry, G in named
                if G.order == H.order and are_conjugate(G, H)
            ),
            None,
        )
        if match is not None:
            entry, G = match
            entries.append(CatalogEntry.from_group(entry.id, G, "exhaustive-enum"))
        else:
            index += 1
            entries.append(
                CatalogEntry.from_group(f"T{n}.{index}@{n}", H, "exhaustive-enum")
            )
    return entries


def build_catalog(
    max_exhaustive_degree: int = 6,
    families: Sequence[str] = FAMILIES,
    caps: Caps = DEFAULT_CAPS,
    max_family_degree: int = 12,
    progress: bool = False,
    min_degree: int = 2,
) -> Catalog:
    """Exhaustive transitive groups of small degree plus named families.

    Degrees up to `max_exhaustive_degree` come from the subgroup lattice of
    S_n; larger degrees keep the deduplicated named entries. Entries are
    ordered by degree, then order, then id. Degrees below `min_degree` are
    left out.
    """
    assert max_exhaustive_degree >= 0, "max_exhaustive_degree must be non-negative!"
    caps.validate()
    named = named_entries(max_family_degree, families, caps, min_degree)
    entries: List[CatalogEntry] = []
    degrees = range(
        max(min_degree, 2), max(max_exhaustive_degree, max_family_degree) + 1
    )
    for n in tqdm(degrees, disable=not progress, desc="catalog"):
        found = [entry for entry, _ in named.get(n, [])]
        if n <= max_exhaustive_degree:
            try:
                found = exhaustive_entries(n, named.get(n, []), caps)
            except GroupTooLargeError as error:
                logger.warning("degree %d kept to named families: %s", n, error)
        logger.info("degree %d: %d catalog entries", n, len(found))
        entries.extend(sorted(found, key=lambda e: (e.order, e.id)))
    return Catalog(entries)


def entry_from_graph(
    name: str, digraph: ColoredDigraph, caps: Caps = DEFAULT_CAPS
) -> CatalogEntry:
    """Catalog entry for the automorphism group of an imported graph."""
    G = aut_of_coloring(digraph, caps.engine_cap, caps.element_cap)
    return CatalogEntry.from_group(f"{name}@{G.degree}", G, "graph-import")
