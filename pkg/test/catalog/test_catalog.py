import json
from pathlib import Path
from typing import List

import networkx as nx
from pytest import fixture, mark, raises

import korbit as kb
from korbit.catalog.families import cyclic_generators, left_regular
from korbit.config import Caps
from korbit.exceptions import CatalogLoadError, UnknownGroupError


def transitive_class_count(n: int) -> int:
    """Conjugacy classes of transitive subgroups of S_n, by brute force.

    Every subgroup of S_n for n <= 5 is generated by two elements, and up to
    conjugacy the first one can be taken from a set of cycle type
    representatives.
    """
    S = kb.symmetric_group(n)
    representatives = {}
    for g in S:
        representatives.setdefault(g.cycle_type(), g)
    found = {
        frozenset(kb.close_group([a, b], degree=n).elements)
        for a in representatives.values()
        for b in S
    }
    transitive = [H for H in found if kb.close_group(list(H)).is_transitive()]
    classes: List[frozenset] = []
    while transitive:
        H = transitive.pop()
        conjugates = {frozenset(h.conjugate(g) for h in H) for g in S}
        transitive = [K for K in transitive if K not in conjugates]
        classes.append(H)
    return len(classes)


@fixture(scope="module")
def catalog() -> kb.Catalog:
    return kb.build_catalog(max_exhaustive_degree=5, max_family_degree=5)


class TestBuildCatalog:
    @mark.parametrize("n, count", [(2, 1), (3, 2), (4, 5), (5, 5)])
    def test_transitive_class_counts(self, n: int, count: int) -> None:
        classes = kb.transitive_classes(n)
        assert len(classes) == count
        assert transitive_class_count(n) == count
        assert all(H.is_transitive() for H in classes)

    def test_named_ids(self, catalog: kb.Catalog) -> None:
        assert [e.id for e in catalog.by_degree(4, min_degree=4)] == [
            "C4@4",
            "V4-regular@4",
            "D4@4",
            "A4@4",
            "S4@4",
        ]
        assert [e.id for e in catalog.by_degree(3)] == ["C2@2", "C3@3", "S3@3"]
        assert [e.id for e in catalog.by_degree(5, min_degree=5)] == [
            "C5@5",
            "D5@5",
            "F20@5",
            "A5@5",
            "S5@5",
        ]
        assert {e.provenance for e in catalog} == {"exhaustive-enum"}

    def test_entries_reproduce_their_order(self, catalog: kb.Catalog) -> None:
        for entry in catalog:
            G = entry.group()
            assert G.order == entry.order
            assert G.degree == entry.degree
            assert entry.id.endswith(f"@{entry.degree}")

    def test_named_only_degrees(self) -> None:
        built = kb.build_catalog(max_exhaustive_degree=3, max_family_degree=4)
        degree_four = built.by_degree(4, min_degree=4)
        assert {e.provenance for e in degree_four} == {"named-family"}
        assert "C2wrC2@4" not in built
        assert "C4-regular@4" not in built
        assert "V4-regular@4" in built

    def test_unnumbered_classes(self) -> None:
        built = kb.build_catalog(max_exhaustive_degree=6, max_family_degree=6)
        degree_six = built.by_degree(6, min_degree=6)
        assert len(degree_six) == 16
        numbered = [e.id for e in degree_six if e.id.startswith("T6.")]
        assert len(numbered) == len(set(numbered))
        assert "C6@6" in degree_six and "S3-regular@6" in degree_six


class TestCatalogFile:
    def test_save_and_load(self, catalog: kb.Catalog, tmp_path: Path) -> None:
        path = tmp_path / "catalog.jsonl"
        kb.save_catalog(catalog, path)
        loaded = kb.load_catalog(path)
        assert [e.to_dict() for e in loaded] == [e.to_dict() for e in catalog]

    @mark.parametrize(
        "record, message",
        [
            ({"degree": 4}, "invalid entry"),
            (
                {
                    "id": "C4@4",
                    "degree": 4,
                    "generators": [[2, 3, 4, 1]],
                    "order": 8,
                    "provenance": "named-family",
                },
                "stored order 8",
            ),
            (
                {
                    "id": "C4@4",
                    "degree": 4,
                    "generators": [[2, 3, 4, 1]],
                    "order": 4,
                    "provenance": "guess",
                },
                "unknown provenance",
            ),
            (
                {
                    "id": "C4@4",
                    "degree": 4,
                    "generators": [[2, 2, 4, 1]],
                    "order": 4,
                    "provenance": "named-family",
                },
                "bad generators",
            ),
        ],
    )
    def test_bad_records(self, tmp_path: Path, record: dict, message: str) -> None:
        path = tmp_path / "catalog.jsonl"
        path.write_text("\n" + json.dumps(record) + "\n")
        with raises(CatalogLoadError, match=message) as error:
            kb.load_catalog(path)
        assert error.value.line == 2

    def test_bad_json_and_duplicates(self, tmp_path: Path) -> None:
        path = tmp_path / "catalog.jsonl"
        path.write_text("{not json\n")
        with raises(CatalogLoadError):
            kb.load_catalog(path)
        entry = kb.CatalogEntry.from_group(
            "C4@4", kb.close_group(cyclic_generators(4)), "named-family"
        )
        kb.save_catalog([entry, entry], path)
        with raises(CatalogLoadError, match="duplicate"):
            kb.load_catalog(path)

    def test_missing_file(self, tmp_path: Path) -> None:
        with raises(CatalogLoadError, match="not found"):
            kb.load_catalog(tmp_path / "absent.jsonl")


class TestCatalog:
    def test_find(self, catalog: kb.Catalog) -> None:
        assert catalog.find("A4@4").order == 12
        with raises(UnknownGroupError):
            catalog.find("A7@7")

    def test_frame(self, catalog: kb.Catalog) -> None:
        frame = catalog.to_frame()
        assert list(frame.columns) == ["id", "degree", "order", "provenance", *kb.TAGS]
        assert len(frame) == len(catalog)
        assert frame["degree"].is_monotonic_increasing

    def test_tags(self) -> None:
        entry = kb.CatalogEntry.from_group(
            "C4@4", kb.close_group(cyclic_generators(4)), "named-family"
        )
        assert kb.compute_tags(entry) == {
            "transitive": True,
            "primitive": False,
            "abelian": True,
            "nmd": False,
            "two_closed": True,
        }
        regular = kb.close_group(left_regular(kb.symmetric_group(3)))
        s3 = kb.CatalogEntry.from_group("S3-regular@6", regular, "named-family")
        tags = kb.compute_tags(s3, names=["nmd", "abelian"])
        assert tags == {"nmd": True, "abelian": False}

    def test_tags_skip_on_resource_cap(self) -> None:
        entry = kb.CatalogEntry.from_group(
            "C6@6", kb.close_group(cyclic_generators(6)), "named-family"
        )
        tags = kb.compute_tags(entry, Caps(engine_cap=3))
        assert "two_closed" not in tags
        assert tags["transitive"] is True

    def test_entry_from_graph(self) -> None:
        digraph = kb.ColoredDigraph.from_networkx(nx.cycle_graph(5))
        entry = kb.entry_from_graph("pentagon", digraph)
        assert entry.id == "pentagon@5"
        assert entry.order == 10
        assert entry.provenance == "graph-import"
