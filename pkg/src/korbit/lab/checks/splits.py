import itertools
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy import divisors

from ...calculus import automorphic_status, automorphic_subsets
from ...calculus.automorphic import has_orbit
from ...config import LabConfig
from ...group import PermutationGroup, intersection, normalizer, stabilizer
from ..base import (
    BaseCheck,
    Evaluation,
    Facts,
    capped,
    is_lab_primitive,
    subset_orbit,
    subset_orbit_reps,
)
from ..exact_cover import exact_cover
from ..result import Params

Subset = Tuple[int, ...]


def permutes_blocks(H: PermutationGroup, blocks: Sequence[Subset]) -> bool:
    classes = {frozenset(b) for b in blocks}
    return all(
        frozenset(g(x) for x in b) in classes for g in H.generators for b in classes
    )


def common_stabilizer(
    G: PermutationGroup, subsets: Sequence[Subset]
) -> PermutationGroup:
    A = G
    for subset in subsets:
        A = intersection(A, stabilizer(G, set(subset)))
    return A


def normalizer_blocks(
    G: PermutationGroup, subsets: Sequence[Subset]
) -> Tuple[PermutationGroup, Facts]:
    """Normalizer in G of the common stabilizer, acting on the union of the subsets."""
    A = common_stabilizer(G, subsets)
    union = set(itertools.chain.from_iterable(subsets))
    N = stabilizer(normalizer(G, A), union)
    facts = {
        "A_order": A.order,
        "normalizer_order": N.order,
        "normalizer_transitive": has_orbit(N, union),
        "blocks_preserved": permutes_blocks(N, subsets),
        "normalizer_ambient": "G",
    }
    return A, facts


def split_hypothesis(
    G: PermutationGroup, subsets: Sequence[Subset]
) -> Evaluation:
    """Automorphic, pairwise G-isomorphic subsets with no orbit member left over."""
    first = subsets[0]
    orbit = set(subset_orbit(G, first))
    rest = set(range(1, G.degree + 1)).difference(*subsets)
    facts = {
        "transitive": G.is_transitive(),
        "automorphic": all(
            automorphic_status(G, subset).automorphic for subset in subsets
        ),
        "G_isomorphic": all(tuple(sorted(s)) in orbit for s in subsets),
        "remainder_free": not any(set(member) <= rest for member in orbit),
    }
    return Evaluation(all(facts.values()), facts)


class PairSplitCheck(BaseCheck):
    """Two G-isomorphic automorphic k-subsets and the group fixing both."""

    check_id = "CHK-L8"
    anchor = "two G-isomorphic automorphic k-subsets share a nontrivial stabilizer"

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        if not G.is_transitive():
            return iter(())

        def pairs() -> Iterator[Params]:
            for k in range(2, G.degree // 2 + 1):
                for S1, S2 in itertools.combinations(automorphic_subsets(G, k), 2):
                    if not set(S1) & set(S2):
                        yield {"k": k, "subsets": [list(S1), list(S2)]}

        return capped(pairs(), config)

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        return split_hypothesis(G, [tuple(s) for s in params["subsets"]])

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        subsets = [tuple(s) for s in params["subsets"]]
        alpha = subsets[0] + subsets[1]
        A, facts = normalizer_blocks(G, subsets)
        facts["alpha_automorphic"] = automorphic_status(G, alpha).automorphic
        holds = (
            facts["alpha_automorphic"]
            and A.order > 1
            and facts["normalizer_transitive"]
            and facts["blocks_preserved"]
        )
        return Evaluation(holds, facts)


class MultiSplitCheck(BaseCheck):
    """Three or more G-isomorphic automorphic k-subsets; A may be trivial."""

    check_id = "CHK-L9"
    anchor = "several automorphic k-subsets may share only the trivial stabilizer"

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        if not G.is_transitive():
            return iter(())

        def families() -> Iterator[Params]:
            for k in range(2, G.degree // 3 + 1):
                for rep in subset_orbit_reps(G, k):
                    orbit = subset_orbit(G, rep)
                    for size in range(3, G.degree // k + 1):
                        for family in itertools.combinations(orbit, size):
                            points = set().union(*map(set, family))
                            if len(points) == k * size:
                                yield {"k": k, "subsets": [list(s) for s in family]}

        return capped(families(), config)

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        return split_hypothesis(G, [tuple(s) for s in params["subsets"]])

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        subsets = [tuple(s) for s in params["subsets"]]
        alpha = tuple(itertools.chain.from_iterable(subsets))
        A, facts = normalizer_blocks(G, subsets)
        facts["alpha_automorphic"] = automorphic_status(G, alpha).automorphic
        facts["A_trivial"] = A.order == 1
        holds = (
            facts["alpha_automorphic"]
            and facts["normalizer_transitive"]
            and facts["blocks_preserved"]
        )
        return Evaluation(holds, facts)


def largest_automorphic_divisor(G: PermutationGroup) -> Optional[int]:
    """Largest proper divisor k > 1 of n realized as an automorphic k-subset."""
    for k in reversed(divisors(G.degree)[1:-1]):
        if automorphic_subsets(G, int(k)):
            return int(k)
    return None


class AutomorphicPartitionCheck(BaseCheck):
    """A primitive group splits V into automorphic k-subsets."""

    check_id = "CHK-T10"
    anchor = "a primitive group splits V into automorphic k-subsets"

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        yield {}

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        primitive = is_lab_primitive(G, config)
        k = largest_automorphic_divisor(G) if primitive else None
        return Evaluation(k is not None, {"primitive": primitive, "k": k})

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        k = largest_automorphic_divisor(G)
        assert k is not None, "hypothesis must hold before the conclusion!"
        candidates = automorphic_subsets(G, k)
        V = range(1, G.degree + 1)
        reading: Optional[str] = None
        cover: Optional[List] = None
        for rep in subset_orbit_reps(G, k):
            if rep in candidates:
                cover = exact_cover(V, subset_orbit(G, rep))
                if cover is not None:
                    reading = "G-isomorphic"
                    break
        if cover is None:
            cover = exact_cover(V, candidates)
            reading = "S_n-isomorphic" if cover is not None else None
        partition = None if cover is None else [sorted(c) for c in cover]
        facts = {"k": k, "reading": reading, "partition": partition}
        return Evaluation(cover is not None, facts)
