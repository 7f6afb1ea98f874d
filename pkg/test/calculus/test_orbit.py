import itertools
from pathlib import Path

import numpy as np
from pytest import FixtureRequest, fixture, mark, raises

import korbit as kb
from korbit.catalog.families import (
    alternating_generators,
    cyclic_generators,
    dihedral_generators,
    left_regular,
    symmetric_generators,
    wreath_generators,
)
from korbit.exceptions import PreconditionError, TooManyTuplesError

GROUPS = {
    "C4@4": cyclic_generators(4),
    "D4@4": dihedral_generators(4),
    "A4@4": alternating_generators(4),
    "C5@5": cyclic_generators(5),
    "S5@5": symmetric_generators(5),
    "C2wrC3@6": wreath_generators(2, 3),
    "S3-regular@6": left_regular(kb.symmetric_group(3)),
}


class TestKOrbits:
    rng = np.random.default_rng(42)

    @fixture(params=sorted(GROUPS))
    def group(self, request: FixtureRequest) -> kb.PermutationGroup:
        return kb.close_group(GROUPS[request.param])

    @mark.parametrize("k", [2, 3])
    def test_orbits_partition_tuples(
        self, group: kb.PermutationGroup, k: int
    ) -> None:
        orbits = kb.orb_k(group, k)
        union = set().union(*(X.tuple_set for X in orbits))
        assert sum(len(X) for X in orbits) == len(union)
        assert union == set(itertools.permutations(range(1, group.degree + 1), k))
        assert len(union) == kb.tuple_count(group.degree, k)
        assert all(group.order % len(X) == 0 for X in orbits)
        assert [X.tuples[0] for X in orbits] == sorted(X.tuples[0] for X in orbits)

    @mark.parametrize("k", [2, 3])
    def test_equivariance(self, group: kb.PermutationGroup, k: int) -> None:
        tuples = list(itertools.permutations(range(1, group.degree + 1), k))
        for _ in range(100):
            g = group.elements[self.rng.integers(group.order)]
            x = tuples[self.rng.integers(len(tuples))]
            X = kb.k_orbit(group, x)
            assert kb.k_orbit(group, kb.left_act(g, x)) == X
            assert kb.left_act(g, X.tuple_set) == X.tuple_set

    @mark.parametrize("k", [2, 3])
    def test_incoherent_components_are_invariant(
        self, group: kb.PermutationGroup, k: int
    ) -> None:
        for X in kb.orb_k(group, k):
            verdict = kb.coherence(X)
            if verdict.kind is not kb.Coherence.INCOHERENT:
                continue
            components = set(verdict.components)
            for g in group.generators:
                assert {frozenset(g(p) for p in c) for c in components} == components

    def test_orbit_counts(self) -> None:
        c4 = kb.close_group(cyclic_generators(4))
        assert len(kb.orb_k(c4, 2)) == 3
        assert len(kb.orb_k(kb.symmetric_group(4), 3)) == 1
        assert len(kb.orb_k(c4, 1)) == 1

    def test_preconditions(self) -> None:
        c4 = kb.close_group(cyclic_generators(4))
        with raises(PreconditionError):
            kb.orb_k(c4, 5)
        with raises(TooManyTuplesError):
            kb.orb_k(c4, 3, tuple_cap=10)
        with raises(PreconditionError):
            kb.KOrbit([(1, 2), (1, 2, 3)], 3)

    def test_korb_round_trip(self, tmp_path: Path) -> None:
        X = kb.k_orbit(kb.close_group(cyclic_generators(4)), (1, 3))
        path = tmp_path / "c4.korb"
        kb.write_korb(X, path)
        assert path.read_text().splitlines()[0] == "k=2 n=4 size=4"
        assert kb.read_korb(path) == X

    @mark.parametrize(
        "text",
        ["", "k=2 n=4\n(1,2)\n", "k=2 n=4 size=2\n(1,2)\n", "k=2 n=4 size=1\n1,2\n"],
    )
    def test_korb_errors(self, text: str) -> None:
        with raises(PreconditionError):
            kb.KOrbit.from_text(text)

    def test_blocks_and_family(self) -> None:
        X = kb.k_orbit(kb.close_group(cyclic_generators(4)), (1, 3))
        blocks = kb.k_blocks(X)
        coordinates = [b.coordinates for b in blocks]
        assert coordinates == [frozenset({1, 3}), frozenset({2, 4})]
        assert blocks[0].tuples == ((1, 3), (3, 1))
        family = X.coordinate_family()
        assert family.sets() == [frozenset({1, 3}), frozenset({2, 4})]
        assert [m for _, m in family.members] == [2, 2]
