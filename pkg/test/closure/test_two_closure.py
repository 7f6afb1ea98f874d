import json
import logging
from pathlib import Path
from typing import List

import numpy as np
from pytest import LogCaptureFixture, mark, raises

import korbit as kb
from korbit.catalog.families import (
    alternating_generators,
    cyclic_generators,
    dihedral_generators,
    left_regular,
)
from korbit.exceptions import EngineCapError, PreconditionError


def klein_regular() -> List[kb.Permutation]:
    v4 = kb.close_group(
        [kb.parse_permutation("(1 2)", 4), kb.parse_permutation("(3 4)", 4)]
    )
    return left_regular(v4)


def filtration(G: kb.PermutationGroup) -> set:
    """Elements of S_n preserving every orbital of G."""
    colors = kb.orbitals(G)
    return {
        g
        for g in kb.symmetric_group(G.degree)
        if colors.preserved_by(np.array(g.array0))
    }


CASES = {
    "C4": (cyclic_generators(4), 4),
    "A4": (alternating_generators(4), 24),
    "V4-regular": (klein_regular(), 4),
    "A5": (alternating_generators(5), 120),
    "D5": (dihedral_generators(5), 10),
    "C6": (cyclic_generators(6), 6),
}


class TestTwoClosure:
    @mark.parametrize("name", sorted(CASES))
    def test_against_filtration(self, name: str) -> None:
        generators, order = CASES[name]
        G = kb.close_group(generators)
        closure = kb.two_closure(G)
        assert closure.order == order
        assert set(closure.elements) == filtration(G)
        assert G.is_subgroup_of(closure)
        assert kb.is_2_closed(G) == (order == G.order)

    def test_closure_is_idempotent(self) -> None:
        closure = kb.two_closure(kb.close_group(alternating_generators(4)))
        assert kb.two_closure(closure) == closure

    def test_orbitals(self) -> None:
        colors = kb.orbitals(kb.close_group(cyclic_generators(4)))
        assert colors.diagonal_colors() == [0]
        assert len(colors.off_diagonal_colors()) == 3
        assert not colors.is_symmetric()

    def test_cache(self, tmp_path: Path, caplog: LogCaptureFixture) -> None:
        G = kb.close_group(alternating_generators(4))
        first = kb.two_closure(G, cache_dir=tmp_path)
        path = tmp_path / f"{kb.closure_digest(G)}.json"
        record = json.loads(path.read_text())
        assert record["order"] == 24
        with caplog.at_level(logging.INFO, logger="korbit.closure.two_closure"):
            second = kb.two_closure(G, cache_dir=tmp_path)
        assert second == first
        assert "cache hit" in caplog.text

    def test_stale_cache_is_recomputed(self, tmp_path: Path) -> None:
        G = kb.close_group(cyclic_generators(4))
        path = tmp_path / f"{kb.closure_digest(G)}.json"
        path.write_text(json.dumps({"degree": 4, "order": 5, "generators": []}))
        assert kb.two_closure(G, cache_dir=tmp_path).order == 4

    def test_digest_ignores_generator_order(self) -> None:
        a = kb.close_group(alternating_generators(4))
        b = kb.close_group(list(reversed(alternating_generators(4))))
        assert kb.closure_digest(a) == kb.closure_digest(b)

    def test_engine_cap(self) -> None:
        with raises(EngineCapError):
            kb.two_closure(kb.close_group(cyclic_generators(6)), engine_cap=5)


class TestColoredDigraph:
    def test_rejects_bad_matrices(self) -> None:
        with raises(PreconditionError):
            kb.ColoredDigraph(np.zeros((2, 3)))
        with raises(PreconditionError):
            kb.ColoredDigraph(np.zeros((3, 3)))

    def test_networkx_export(self) -> None:
        colors = kb.orbitals(kb.close_group(dihedral_generators(5)))
        graph = colors.to_networkx()
        assert graph.number_of_nodes() == 5
        assert graph.number_of_edges() == 20
        again = kb.orbitals(kb.close_group(list(reversed(dihedral_generators(5)))))
        assert colors.same_partition(again)
