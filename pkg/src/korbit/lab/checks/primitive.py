from typing import Iterator, List

from ...config import LabConfig
from ...group import (
    Permutation,
    PermutationGroup,
    block_systems,
    classify_md,
    close_group,
    conjugate_subgroups,
    subgroups,
)
from ..base import BaseCheck, Evaluation, is_lab_primitive, lab_is_2_closed
from ..result import Params


def counts_as_imprimitive(H: PermutationGroup, config: LabConfig) -> bool:
    """Transitive with a nontrivial block system; Abelian groups only count
    under the standard convention."""
    if not H.is_transitive() or not block_systems(H):
        return False
    return config.abelian_primitive_convention == "standard" or not H.is_abelian()


def maximal_imprimitive_md(
    G: PermutationGroup, config: LabConfig
) -> List[PermutationGroup]:
    """Conjugacy representatives of the maximal imprimitive md-subgroups of G."""
    lattice = subgroups(G, config.caps.subgroup_cap)
    candidates = [
        H
        for H in lattice
        if H.order < G.order
        and counts_as_imprimitive(H, config)
        and not classify_md(H).is_nmd
    ]
    return [
        H
        for H in candidates
        if not any(
            B.order > H.order
            and B.order % H.order == 0
            and any(H.is_subgroup_of(C) for C in conjugate_subgroups(G, B))
            for B in candidates
        )
    ]


class MdSubgroupClosureCheck(BaseCheck):
    """A primitive group is 2-closed exactly when its maximal imprimitive
    md-subgroup is."""

    check_id = "CHK-L15"
    anchor = "a primitive group is 2-closed exactly when its md-subgroup is"

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        if not is_lab_primitive(G, config):
            return
        if G.order > config.caps.subgroup_cap:
            yield {"subgroup": None}
            return
        for H in maximal_imprimitive_md(G, config)[: config.caps.instance_cap]:
            yield {"subgroup": [list(g.images) for g in H.generators]}

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        primitive = is_lab_primitive(G, config)
        if params["subgroup"] is None:
            return Evaluation(None if primitive else False, {"primitive": primitive})
        A = self._subgroup(G, params)
        facts = {
            "primitive": primitive,
            "contained": A.is_subgroup_of(G),
            "imprimitive": counts_as_imprimitive(A, config),
            "md": A.is_transitive() and not classify_md(A).is_nmd,
            "subgroup_order": A.order,
        }
        holds = (
            primitive
            and facts["contained"]
            and facts["imprimitive"]
            and facts["md"]
        )
        return Evaluation(holds, facts)

    @staticmethod
    def _subgroup(G: PermutationGroup, params: Params) -> PermutationGroup:
        gens = [Permutation(images) for images in params["subgroup"]]
        return close_group(gens, degree=G.degree)

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        closed, order = lab_is_2_closed(G, config)
        sub_closed, sub_order = lab_is_2_closed(self._subgroup(G, params), config)
        facts = {
            "two_closed": closed,
            "closure_order": order,
            "subgroup_two_closed": sub_closed,
            "subgroup_closure_order": sub_order,
        }
        return Evaluation(closed == sub_closed, facts)


class NoImprimitiveSubgroupCheck(BaseCheck):
    """A primitive group without imprimitive transitive subgroups is not 2-closed."""

    check_id = "CHK-L16"
    anchor = "a primitive group without imprimitive subgroups is not 2-closed"

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        yield {}

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        primitive = is_lab_primitive(G, config)
        if not primitive:
            return Evaluation(False, {"primitive": False})
        lattice = subgroups(G, config.caps.subgroup_cap)
        offending = [H for H in lattice if counts_as_imprimitive(H, config)]
        facts = {
            "primitive": True,
            "complete": lattice.complete,
            "imprimitive_subgroup": (
                [list(g.images) for g in offending[0].generators] if offending else None
            ),
        }
        if offending:
            return Evaluation(False, facts)
        return Evaluation(True if lattice.complete else None, facts)

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        closed, order = lab_is_2_closed(G, config)
        return Evaluation(not closed, {"two_closed": closed, "closure_order": order})
