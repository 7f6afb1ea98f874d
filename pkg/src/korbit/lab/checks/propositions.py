import itertools
from typing import Iterator, List, Tuple

from ...calculus import (
    LatticeOp,
    aut_kset,
    automorphic_status,
    coset_partitions,
    k_orbit,
    orb_k,
    partition_meet_join,
)
from ...config import LabConfig
from ...group import (
    PartitionOfV,
    PermutationGroup,
    block_systems,
    generated_subgroup,
    intersection,
    is_normal,
    partition_action,
    stabilizer,
    subgroups,
)
from ...group.blocks import is_invariant
from ...group.group import KTuple
from ..base import BaseCheck, Evaluation, capped, subset_orbit_reps
from ..result import Params


class StabilizerQuotientCheck(BaseCheck):
    """Stab(Co(a))/Stab(a) has the order of Aut(X) for X = Stab(Co(a)).a."""

    check_id = "CHK-P1"
    anchor = "Stab(Co(a))/Stab(a) has the order of Aut(X)"

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        if not G.is_transitive():
            return iter(())
        subsets = (
            {"alpha": list(subset)}
            for k in range(2, G.degree)
            for subset in subset_orbit_reps(G, k)
        )
        return capped(subsets, config)

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        status = automorphic_status(G, tuple(params["alpha"]))
        return Evaluation(status.automorphic, {"automorphic": status.automorphic})

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        alpha = tuple(params["alpha"])
        S = stabilizer(G, set(alpha))
        H = stabilizer(S, alpha)
        X = k_orbit(S, alpha)
        aut = aut_kset(X, config.caps.engine_cap, config.caps.element_cap)
        normal = is_normal(S, H)
        facts = {
            "stabilizer_order": S.order,
            "kernel_order": H.order,
            "normal": normal,
            "aut_order": aut.order,
            "aut_transitive": aut.transitive,
        }
        holds = normal and aut.transitive and aut.order * H.order == S.order
        return Evaluation(holds, facts)


def suborbit_candidates(
    G: PermutationGroup, config: LabConfig
) -> Iterator[Tuple[int, List[KTuple]]]:
    """Orbits of subgroup representatives through the least tuple of each k-orbit.

    Each candidate is reported once, as (k, sorted tuples), for k = 2, 3.
    """
    lattice = subgroups(G, config.caps.subgroup_cap)
    seen = set()
    for k in range(2, min(3, G.degree - 1) + 1):
        for X in orb_k(G, k, config.caps.tuple_cap):
            for A in lattice:
                Y = k_orbit(A, X.tuples[0]).tuples
                if len(Y) < len(X) and (k, Y) not in seen:
                    seen.add((k, Y))
                    yield k, list(Y)


class CosetNormalityCheck(BaseCheck):
    """L = R for a suborbit Y forces Stab(Y) to be normal."""

    check_id = "CHK-P2"
    anchor = "equal left and right coset partitions give a normal stabilizer"

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        found = (
            {"k": k, "tuples": [list(t) for t in Y]}
            for k, Y in suborbit_candidates(G, config)
        )
        return capped(found, config)

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        pair = coset_partitions(G, [tuple(t) for t in params["tuples"]])
        facts = {
            "suborbit": pair.stabilizer_transitive_on_block,
            "L_is_partition": pair.L_is_partition,
            "L_equals_R": pair.L_equals_R,
        }
        holds = pair.stabilizer_transitive_on_block and pair.L_equals_R
        return Evaluation(holds, facts)

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        pair = coset_partitions(G, [tuple(t) for t in params["tuples"]])
        normal = is_normal(G, pair.stabilizer)
        return Evaluation(
            normal, {"stabilizer_order": pair.stabilizer.order, "normal": normal}
        )


class BlockKernelCheck(BaseCheck):
    """Control: the kernel of the action on a block system is normal."""

    check_id = "CHK-P3"
    anchor = "the kernel of a block action is normal"
    control = True

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        if not G.is_transitive():
            return iter(())
        systems = ({"partition": Q.as_lists()} for Q in block_systems(G))
        return capped(systems, config)

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        Q = PartitionOfV(params["partition"], G.degree)
        invariant = is_invariant(G, Q) and not Q.is_trivial()
        return Evaluation(invariant, {"invariant": invariant})

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        action = partition_action(G, PartitionOfV(params["partition"], G.degree))
        normal = is_normal(G, action.kernel)
        facts = {"kernel_order": action.kernel.order, "normal": normal}
        return Evaluation(normal, facts)


class MeetJoinCheck(BaseCheck):
    """Meet and join of two coset partitions against their stabilizers."""

    check_id = "CHK-P4"
    anchor = "the meet of two coset partitions is stabilized by the intersection"

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        limit = 4 * config.caps.instance_cap
        candidates = list(itertools.islice(suborbit_candidates(G, config), limit))

        def pairs() -> Iterator[Params]:
            for (k, Y), (l, Z) in itertools.combinations(candidates, 2):
                if k == l and set(Y) & set(Z) and set(Y) != set(Z):
                    yield {
                        "k": k,
                        "Y": [list(t) for t in Y],
                        "Z": [list(t) for t in Z],
                    }

        return capped(pairs(), config)

    @staticmethod
    def _sets(params: Params) -> Tuple[List[KTuple], List[KTuple]]:
        return [tuple(t) for t in params["Y"]], [tuple(t) for t in params["Z"]]

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        Y, Z = self._sets(params)
        first, second = coset_partitions(G, Y), coset_partitions(G, Z)
        facts = {
            "Y_suborbit": first.stabilizer_transitive_on_block,
            "Z_suborbit": second.stabilizer_transitive_on_block,
            "Y_partition": first.L_is_partition,
            "Z_partition": second.L_is_partition,
            "same_orbit": first.orbit == second.orbit,
            "intersection_size": len(set(Y) & set(Z)),
        }
        holds = all(v for v in facts.values())
        return Evaluation(holds, facts)

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        Y, Z = self._sets(params)
        first, second = coset_partitions(G, Y), coset_partitions(G, Z)
        meet = partition_meet_join(first.L, second.L, LatticeOp.MEET)
        join = partition_meet_join(first.L, second.L, LatticeOp.JOIN)
        T = sorted(set(Y) & set(Z))
        U = sorted(next(c for c in join if set(Y) <= c))
        by_T, by_U = coset_partitions(G, T), coset_partitions(G, U)
        both = intersection(first.stabilizer, second.stabilizer)
        spanned = generated_subgroup(
            first.stabilizer, second.stabilizer, cap=config.caps.element_cap
        )
        facts = {
            "meet_is_translates": meet == by_T.L,
            "join_is_translates": join == by_U.L,
            "stabilizer_meet": by_T.stabilizer == both,
            "stabilizer_join": by_U.stabilizer == spanned,
        }
        return Evaluation(all(facts.values()), facts)
