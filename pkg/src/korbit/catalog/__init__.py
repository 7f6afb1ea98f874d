from .builder import (
    build_catalog,
    entry_from_graph,
    exhaustive_entries,
    named_entries,
    transitive_classes,
)
from .entry import (
    TAGS,
    Catalog,
    CatalogEntry,
    compute_tags,
    load_catalog,
    save_catalog,
)
from .families import FAMILIES, FamilyMember, family_members, left_regular

__all__ = [
    "FAMILIES",
    "TAGS",
    "Catalog",
    "CatalogEntry",
    "FamilyMember",
    "build_catalog",
    "compute_tags",
    "entry_from_graph",
    "exhaustive_entries",
    "family_members",
    "left_regular",
    "load_catalog",
    "named_entries",
    "save_catalog",
    "transitive_classes",
]
