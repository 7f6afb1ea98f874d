from typing import Iterator, Sequence

import numpy as np

from ...calculus import (
    Coherence,
    KSetAutomorphisms,
    KOrbit,
    Ternary,
    aut_kset,
    coherence,
    is_elementary_coherent,
    k_orbit,
    orb_k,
    suborbits,
)
from ...config import LabConfig
from ...group import PermutationGroup, subgroups
from ...group.group import KTuple
from ..base import BaseCheck, Evaluation, capped
from ..result import Params


class KOrbitCheck(BaseCheck):
    """Base of the checks whose instances are the k-orbits of G, k = 2, 3."""

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        orbits = (
            {"k": k, "seed": list(X.tuples[0])}
            for k in range(2, min(3, G.degree - 1) + 1)
            for X in orb_k(G, k, config.caps.tuple_cap)
        )
        return capped(orbits, config)

    @staticmethod
    def orbit(G: PermutationGroup, params: Params) -> KOrbit:
        return k_orbit(G, tuple(params["seed"]))

    @staticmethod
    def aut(X: KOrbit, config: LabConfig) -> KSetAutomorphisms:
        return aut_kset(X, config.caps.engine_cap, config.caps.element_cap)

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        X = self.orbit(G, params)
        aut = self.aut(X, config)
        facts = {"aut_order": aut.order, "orbit_size": len(X)}
        return Evaluation(aut.order == len(X), facts)


class TranslatePartitionCheck(KOrbitCheck):
    """If every Aut(X)-translate family of a suborbit partitions X, |Aut(X)| = |X|."""

    check_id = "CHK-L5"
    anchor = "translate partitions of every suborbit force |Aut(X)| = |X|"

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        X = self.orbit(G, params)
        aut = self.aut(X, config)
        tuples = aut.relabeled()
        lattice = subgroups(aut.group, config.caps.subgroup_cap)
        checked = 0
        for A in lattice:
            for Y in suborbits(A.element_array, tuples):
                checked += 1
                if not translates_partition(aut.group, Y):
                    facts = {"suborbits_checked": checked, "offending": Y}
                    return Evaluation(False, facts)
        facts = {"suborbits_checked": checked, "complete": lattice.complete}
        return Evaluation(True if lattice.complete else None, facts)


def translates_partition(A: PermutationGroup, Y: Sequence[KTuple]) -> bool:
    """Whether the translates g.Y (g in A) are pairwise equal or disjoint."""
    cols = np.array(Y, dtype=np.int64) - 1
    blocks = A.element_array[:, cols]
    translates = {frozenset(map(tuple, block.tolist())) for block in blocks}
    covered = set().union(*translates)
    return len(translates) * len(Y) == len(covered)


class IncoherentAutCheck(KOrbitCheck):
    """Aut of an incoherent automorphic k-set is larger than the set."""

    check_id = "CHK-P6"
    anchor = "an incoherent automorphic k-set has more automorphisms than tuples"

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        X = self.orbit(G, params)
        kind = coherence(X).kind
        if kind is not Coherence.INCOHERENT:
            return Evaluation(False, {"coherence": kind.value})
        transitive = self.aut(X, config).transitive
        facts = {"coherence": kind.value, "automorphic": transitive}
        return Evaluation(transitive, facts)

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        X = self.orbit(G, params)
        aut = self.aut(X, config)
        facts = {"aut_order": aut.order, "orbit_size": len(X)}
        return Evaluation(aut.order > len(X), facts)


class ElementaryCoherentCheck(KOrbitCheck):
    """An elementary coherent k-orbit has |Aut(X)| = |X|."""

    check_id = "CHK-L7"
    anchor = "an elementary coherent k-orbit has |Aut(X)| = |X|"

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        X = self.orbit(G, params)
        kind = coherence(X).kind
        if kind is not Coherence.COHERENT:
            return Evaluation(False, {"coherence": kind.value})
        verdict = is_elementary_coherent(
            X, self.aut(X, config), config.caps.subgroup_cap, config.caps.engine_cap
        )
        holds = None if verdict is Ternary.UNKNOWN else verdict is Ternary.TRUE
        return Evaluation(holds, {"coherence": kind.value, "elementary": verdict.value})
