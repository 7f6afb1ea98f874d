import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Literal, Optional, Tuple, Union

import pandas as pd

from ..config import DEFAULT_CAPS, Caps
from ..closure import is_2_closed
from ..exceptions import (
    RESOURCE_ERRORS,
    CatalogLoadError,
    KOrbitError,
    UnknownGroupError,
)
from ..group import (
    Permutation,
    PermutationGroup,
    classify_md,
    close_group,
    is_primitive,
)

logger = logging.getLogger(__name__)

Provenance = Literal["exhaustive-enum", "named-family", "graph-import"]
PROVENANCES = ("exhaustive-enum", "named-family", "graph-import")
TAGS = ("transitive", "primitive", "abelian", "nmd", "two_closed")


@dataclass
class CatalogEntry:
    """One group of the instance corpus.

    Args:
        id (str): unique id "NAME@degree".
        degree (int): number of points.
        generators (Tuple[Tuple[int, ...], ...]): 1-based image lists.
        order (int): order of the generated group.
        tags (Dict[str, bool]): lazily computed structural tags.
        provenance (str): one of exhaustive-enum, named-family, graph-import.
    """

    id: str
    degree: int
    generators: Tuple[Tuple[int, ...], ...]
    order: int
    tags: Dict[str, bool] = field(default_factory=dict)
    provenance: Provenance = "named-family"
    _group: Optional[PermutationGroup] = field(
        default=None, init=False, repr=False, compare=False
    )

    @classmethod
    def from_group(
        cls, id: str, G: PermutationGroup, provenance: Provenance
    ) -> "CatalogEntry":
        entry = cls(
            id,
            G.degree,
            tuple(g.images for g in G.generators),
            G.order,
            provenance=provenance,
        )
        entry._group = G
        return entry

    def group(self, cap: int = DEFAULT_CAPS.element_cap) -> PermutationGroup:
        if self._group is None:
            gens = [Permutation(images) for images in self.generators]
            self._group = close_group(gens, degree=self.degree, cap=cap)
        return self._group

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "degree": self.degree,
            "generators": [list(g) for g in self.generators],
            "order": self.order,
            "tags": dict(sorted(self.tags.items())),
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, record: Dict[str, Any]) -> "CatalogEntry":
        return cls(
            str(record["id"]),
            int(record["degree"]),
            tuple(tuple(int(x) for x in g) for g in record["generators"]),
            int(record["order"]),
            {str(k): bool(v) for k, v in record.get("tags", {}).items()},
            record["provenance"],
        )


def compute_tags(
    entry: CatalogEntry,
    caps: Caps = DEFAULT_CAPS,
    names: Iterable[str] = TAGS,
) -> Dict[str, bool]:
    """Fill the missing tags of `entry` and return them.

    A tag whose computation hits a resource cap is left unset.
    """
    G = entry.group(caps.element_cap)
    transitive = G.is_transitive()
    computations = {
        "transitive": lambda: transitive,
        "primitive": lambda: is_primitive(G),
        "abelian": G.is_abelian,
        "nmd": lambda: transitive and classify_md(G).is_nmd,
        "two_closed": lambda: is_2_closed(G, caps.engine_cap, caps.element_cap),
    }
    for name in names:
        if name in entry.tags:
            continue
        try:
            entry.tags[name] = bool(computations[name]())
        except RESOURCE_ERRORS as error:
            logger.warning("tag %s of %s not computed: %s", name, entry.id, error)
    return entry.tags


class Catalog:
    """Ordered collection of catalog entries with unique ids."""

    def __init__(self, entries: Iterable[CatalogEntry]) -> None:
        self.entries: List[CatalogEntry] = list(entries)
        self._by_id = {e.id: e for e in self.entries}
        assert len(self._by_id) == len(self.entries), "catalog ids must be unique!"

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, entry_id: object) -> bool:
        return entry_id in self._by_id

    def find(self, entry_id: str) -> CatalogEntry:
        try:
            return self._by_id[entry_id]
        except KeyError:
            raise UnknownGroupError(f"unknown group id {entry_id!r}") from None

    def by_degree(
        self, max_degree: int, min_degree: int = 1
    ) -> "Catalog":
        return Catalog(e for e in self if min_degree <= e.degree <= max_degree)

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {
                "id": e.id,
                "degree": e.degree,
                "order": e.order,
                "provenance": e.provenance,
                **{tag: e.tags.get(tag) for tag in TAGS},
            }
            for e in self
        ]
        columns = ["id", "degree", "order", "provenance", *TAGS]
        return pd.DataFrame(rows, columns=columns)


def save_catalog(
    entries: Iterable[CatalogEntry], path: Union[str, Path]
) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w") as handle:
        for entry in entries:
            handle.write(json.dumps(entry.to_dict()) + "\n")


def _parse_line(
    text: str, number: int, cap: int
) -> CatalogEntry:
    try:
        entry = CatalogEntry.from_dict(json.loads(text))
    except (ValueError, KeyError, TypeError) as error:
        raise CatalogLoadError(f"invalid entry: {error}", number) from error
    if entry.provenance not in PROVENANCES:
        raise CatalogLoadError(f"unknown provenance {entry.provenance!r}", number)
    try:
        G = entry.group(cap)
    except KOrbitError as error:
        raise CatalogLoadError(f"bad generators: {error}", number) from error
    if G.order != entry.order:
        raise CatalogLoadError(
            f"{entry.id}: stored order {entry.order}, generators give {G.order}",
            number,
        )
    return entry


def load_catalog(
    path: Union[str, Path], cap: int = DEFAULT_CAPS.element_cap
) -> Catalog:
    """Read a JSON Lines catalog, re-validating every stored order.

    Raises:
        CatalogLoadError: missing file, malformed line, duplicate id or an
            order that the generators do not reproduce.
    """
    path = Path(path)
    if not path.is_file():
        raise CatalogLoadError(f"catalog file {path} not found")
    entries: List[CatalogEntry] = []
    seen = set()
    with path.open() as handle:
        for number, text in enumerate(handle, start=1):
            if not text.strip():
                continue
            entry = _parse_line(text, number, cap)
            if entry.id in seen:
                raise CatalogLoadError(f"duplicate id {entry.id}", number)
            seen.add(entry.id)
            entries.append(entry)
    logger.info("loaded %d catalog entries from %s", len(entries), path)
    return Catalog(entries)
