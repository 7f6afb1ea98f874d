import itertools
from pathlib import Path

import numpy as np
from numpy.testing import assert_array_equal
from pytest import fixture, mark, raises
from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup as SympyGroup

import korbit as kb
from korbit.exceptions import (
    DegreeMismatchError,
    GroupTooLargeError,
    MalformedPermutationError,
    PreconditionError,
)


def cyclic(n: int) -> kb.PermutationGroup:
    return kb.close_group([kb.Permutation.from_cycles([tuple(range(1, n + 1))], n)])


class TestPermutationGroup:
    @fixture
    def s4(self) -> kb.PermutationGroup:
        return kb.symmetric_group(4)

    @fixture
    def a4(self) -> kb.PermutationGroup:
        return kb.close_group(
            [kb.parse_permutation("(1 2 3)", 4), kb.parse_permutation("(2 3 4)", 4)]
        )

    def test_closure(self, s4: kb.PermutationGroup, a4: kb.PermutationGroup) -> None:
        assert cyclic(4).order == 4
        assert s4.order == 24
        assert a4.order == 12
        assert kb.close_group([], degree=3).order == 1
        assert list(s4.elements) == sorted(s4.elements)
        assert s4.identity in s4

    @mark.parametrize(
        "generators, degree",
        [
            (["(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"], 6),
            (["(1 2 3)(4 5 6)", "(1 4)"], 6),
            (["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"], 7),
            (["(1 2)(3 4)", "(1 3)(5 6 7 8)"], 8),
        ],
    )
    def test_order_against_sympy(self, generators: list, degree: int) -> None:
        gens = [kb.parse_permutation(text, degree) for text in generators]
        oracle = SympyGroup([SympyPermutation(list(g.array0)) for g in gens])
        assert kb.close_group(gens).order == oracle.order()

    def test_closure_cap(self) -> None:
        with raises(GroupTooLargeError) as error:
            kb.symmetric_group(5, cap=50)
        assert error.value.partial_count > 50

    def test_closure_rejects_mixed_degrees(self) -> None:
        with raises(DegreeMismatchError):
            kb.close_group([kb.Permutation([2, 1]), kb.Permutation([2, 1, 3])])
        with raises(PreconditionError):
            kb.close_group([])

    def test_element_array(self, a4: kb.PermutationGroup) -> None:
        assert a4.element_array.shape == (12, 4)
        rows = np.sort(a4.element_array, axis=1)
        assert_array_equal(rows, np.tile(np.arange(4), (12, 1)))
        assert a4.contains_rows(a4.element_array).all()

    def test_orbits_and_transitivity(self) -> None:
        G = kb.close_group([kb.parse_permutation("(1 2)(3 4 5)", 6)])
        assert G.orbits().as_lists() == [[1, 2], [3, 4, 5], [6]]
        assert not G.is_transitive()
        assert cyclic(5).is_transitive()

    def test_abelian(self, s4: kb.PermutationGroup) -> None:
        assert cyclic(6).is_abelian()
        assert not s4.is_abelian()

    @mark.parametrize(
        "target, order",
        [(1, 6), ((1, 2), 2), ({1, 2}, 4), ({(1, 2), (2, 1)}, 4), ({(1, 2)}, 2)],
    )
    def test_stabilizer(
        self, s4: kb.PermutationGroup, target: object, order: int
    ) -> None:
        assert kb.stabilizer(s4, target).order == order

    def test_stabilizer_out_of_range(self, s4: kb.PermutationGroup) -> None:
        with raises(PreconditionError):
            kb.stabilizer(s4, 5)

    def test_normality(self, s4: kb.PermutationGroup, a4: kb.PermutationGroup) -> None:
        assert kb.is_normal(s4, a4)
        point = kb.stabilizer(s4, 1)
        assert not kb.is_normal(s4, point)
        assert kb.normalizer(s4, point) == point
        assert kb.normalizer(s4, a4) == s4

    def test_generated_and_intersection(
        self, s4: kb.PermutationGroup, a4: kb.PermutationGroup
    ) -> None:
        point = kb.stabilizer(s4, 4)
        assert kb.generated_subgroup(a4, point) == s4
        assert kb.intersection(a4, point).order == 3
        assert a4.is_subgroup_of(s4)
        assert not s4.is_subgroup_of(a4)

    def test_equality_ignores_generators(self, s4: kb.PermutationGroup) -> None:
        other = kb.close_group(
            [kb.parse_permutation("(1 2)", 4), kb.parse_permutation("(2 3 4)", 4)]
        )
        assert other == s4
        assert hash(other) == hash(s4)


class TestConjugacy:
    def test_classes_of_s4(self) -> None:
        classes = kb.conjugacy_classes(kb.symmetric_group(4))
        assert sorted(len(c) for c in classes) == [1, 3, 6, 6, 8]

    def test_conjugate_subgroups(self) -> None:
        s4 = kb.symmetric_group(4)
        point = kb.stabilizer(s4, 1)
        assert len(kb.conjugate_subgroups(s4, point)) == 4

    def test_are_conjugate(self) -> None:
        s4 = kb.symmetric_group(4)
        c4 = cyclic(4)
        other = kb.close_group([kb.parse_permutation("(1 3 2 4)", 4)])
        assert kb.are_conjugate(c4, other)
        assert kb.are_conjugate(c4, other, ambient=s4)
        v4 = kb.close_group(
            [
                kb.parse_permutation("(1 2)(3 4)", 4),
                kb.parse_permutation("(1 3)(2 4)", 4),
            ]
        )
        assert not kb.are_conjugate(c4, v4)
        conjugator = kb.find_conjugator(c4, other)
        assert conjugator is not None
        assert {g.conjugate(conjugator) for g in c4} == set(other)


class TestSubgroups:
    @staticmethod
    def pair_closures(G: kb.PermutationGroup) -> set:
        """Every subgroup generated by at most two elements."""
        return {
            kb.close_group([a, b], G.degree).key
            for a, b in itertools.product(G, repeat=2)
        }

    def test_s4_against_pair_closures(self) -> None:
        s4 = kb.symmetric_group(4)
        lattice = kb.subgroups(s4)
        assert lattice.complete
        assert len(lattice) == 11
        every = kb.all_subgroups(lattice)
        assert len(every) == 30
        assert {H.key for H in every} == self.pair_closures(s4)

    def test_s5_classes(self) -> None:
        lattice = kb.subgroups(kb.symmetric_group(5))
        assert len(lattice) == 19
        assert 60 in lattice.orders()
        assert lattice.orders() == sorted(lattice.orders())

    def test_truncated(self) -> None:
        lattice = kb.subgroups(kb.symmetric_group(4), order_cap=10)
        assert not lattice.complete
        assert all(H.order in (1, 2, 3, 4) for H in lattice)

    def test_derived_subgroup(self) -> None:
        s4 = kb.symmetric_group(4)
        assert kb.derived_subgroup(s4).order == 12
        assert kb.derived_subgroup(kb.derived_subgroup(s4)).order == 4


class TestGroupFiles:
    def test_parse_and_write(self, tmp_path: Path) -> None:
        text = "# cyclic\ndegree 4\n(1 2 3 4)\n"
        G = kb.parse_group_text(text)
        assert G.order == 4
        path = tmp_path / "c4.grp"
        kb.write_group_file(G, path)
        assert kb.read_group_file(path) == G

    @mark.parametrize("text", ["", "degree four\n", "degree 3\n[1,2]\n", "(1 2)\n"])
    def test_parse_errors(self, text: str) -> None:
        with raises(MalformedPermutationError):
            kb.parse_group_text(text)
