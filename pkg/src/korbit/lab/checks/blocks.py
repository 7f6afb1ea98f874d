from typing import Iterator, List

from sympy import isprime

from ...config import LabConfig
from ...group import (
    PartitionOfV,
    Permutation,
    PermutationGroup,
    block_systems,
    classify_md,
    partition_action,
    stabilizer,
)
from ...group.blocks import faithful_systems
from ...regular import find_regular, find_semiregular_of_order, is_prime_power
from ..base import BaseCheck, Evaluation, Facts, capped, lab_is_2_closed
from ..result import CheckStatus, Params, Witness


def nmd_facts(G: PermutationGroup) -> Facts:
    transitive = G.is_transitive()
    md = classify_md(G) if transitive else None
    return {
        "transitive": transitive,
        "nmd": md is not None and md.is_nmd,
        "nmd_witness": (
            None if md is None or md.witness is None else md.witness.as_lists()
        ),
    }


class NmdTwoClosedCheck(BaseCheck):
    """Every nmd-group is 2-closed."""

    check_id = "CHK-L11"
    anchor = "an nmd group is 2-closed"

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        yield {}

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        facts = nmd_facts(G)
        return Evaluation(facts["nmd"], facts)

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        closed, order = lab_is_2_closed(G, config)
        return Evaluation(closed, {"order": G.order, "closure_order": order})


def _faithful_instances(G: PermutationGroup) -> List[PartitionOfV]:
    return faithful_systems(G) if G.is_transitive() else []


class NmdBlockStabilizerCheck(BaseCheck):
    """The pointwise stabilizer of a block of a faithful system is trivial."""

    check_id = "CHK-L12"
    anchor = "a block of a faithful system has trivial pointwise stabilizer"

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        blocks = (
            {"partition": Q.as_lists(), "block": index}
            for Q in _faithful_instances(G)
            for index in range(len(Q))
        )
        return capped(blocks, config)

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        Q = PartitionOfV(params["partition"], G.degree)
        faithful = partition_action(G, Q).faithful
        facts = {**nmd_facts(G), "faithful": faithful}
        return Evaluation(facts["nmd"] and faithful, facts)

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        block = tuple(params["partition"][params["block"]])
        order = stabilizer(G, block).order
        return Evaluation(order == 1, {"pointwise_stabilizer_order": order})


def prime_power_refinements(
    G: PermutationGroup, Q: PartitionOfV
) -> List[PartitionOfV]:
    """Block systems refining Q whose classes have prime-power size."""
    return [
        P
        for P in block_systems(G)
        if P.refines(Q) and is_prime_power(P.class_size or 0)
    ]


class PrimePowerBlocksCheck(BaseCheck):
    """A faithful composite block system refines to prime-power blocks."""

    check_id = "CHK-L13"
    anchor = "a faithful composite block system refines to prime-power blocks"

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        systems = (
            {"partition": Q.as_lists()}
            for Q in _faithful_instances(G)
            if not isprime(Q.class_size or 0)
        )
        return capped(systems, config)

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        Q = PartitionOfV(params["partition"], G.degree)
        faithful = partition_action(G, Q).faithful
        composite = not isprime(Q.class_size or 0)
        facts = {**nmd_facts(G), "faithful": faithful, "composite": composite}
        return Evaluation(facts["nmd"] and faithful and composite, facts)

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        Q = PartitionOfV(params["partition"], G.degree)
        found = [
            P for P in prime_power_refinements(G, Q) if partition_action(G, P).faithful
        ]
        prime = [P for P in found if isprime(P.class_size or 0)]
        facts = {
            "prime_power_refinement": found[0].as_lists() if found else None,
            "prime_refinement": prime[0].as_lists() if prime else None,
        }
        return Evaluation(bool(found), facts)


class PrimePowerRefinementCheck(BaseCheck):
    """Any block system refines to prime-power blocks of the same faithfulness.

    Both readings are recorded: `preserving` keeps faithful and unfaithful
    actions apart, `faithful_only` only requires a faithful action to stay
    faithful. The status follows the preserving reading.
    """

    check_id = "CHK-L14"
    anchor = "a block system refines to prime-power blocks of the same faithfulness"

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        if not G.is_transitive():
            return iter(())
        systems = (
            {"partition": Q.as_lists()}
            for Q in block_systems(G)
            if not is_prime_power(Q.class_size or 0)
        )
        return capped(systems, config)

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        Q = PartitionOfV(params["partition"], G.degree)
        size = Q.class_size or 0
        facts = {"class_size": size, "prime_power": is_prime_power(size)}
        return Evaluation(not is_prime_power(size), facts)

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        Q = PartitionOfV(params["partition"], G.degree)
        faithful = partition_action(G, Q).faithful
        refinements = [
            (P, partition_action(G, P).faithful)
            for P in prime_power_refinements(G, Q)
        ]
        preserving = [P for P, f in refinements if f == faithful]
        faithful_only = [P for P, f in refinements if f or not faithful]
        facts = {
            "faithful": faithful,
            "preserving": preserving[0].as_lists() if preserving else None,
            "faithful_only": faithful_only[0].as_lists() if faithful_only else None,
        }
        return Evaluation(bool(preserving), facts)


def element_facts(found: bool, images: object, cycle_len: object) -> Facts:
    return {"found": found, "witness_images": images, "witness_cycle_len": cycle_len}


def _uniform_member(
    G: PermutationGroup, witness: Witness, length: int = 0
) -> bool:
    """The witness element lies in G, moves points, and has equal cycles."""
    images = witness.get("conclusion", {}).get("witness_images")
    if images is None:
        return False
    g = Permutation(images)
    cycle_type = g.cycle_type()
    if length and cycle_type.counts != ((length, G.degree // length),):
        return False
    return g in G and cycle_type.uniform and not g.is_identity()


class NmdRegularCheck(BaseCheck):
    """Every nmd-group contains a regular element."""

    check_id = "CHK-S31"
    anchor = "an nmd group contains a regular element"

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        yield {}

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        facts = nmd_facts(G)
        return Evaluation(facts["nmd"], facts)

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        report = find_regular(G)
        facts = element_facts(
            report.found, report.witness_images(), report.witness_cycle_len
        )
        return Evaluation(report.found, facts)

    def verify_facts(
        self,
        G: PermutationGroup,
        params: Params,
        witness: Witness,
        status: CheckStatus,
        config: LabConfig,
    ) -> bool:
        if not super().verify_facts(G, params, witness, status, config):
            return False
        return not witness["conclusion"]["found"] or _uniform_member(G, witness)


class KernelRegularCheck(BaseCheck):
    """The kernel on prime-size blocks of an imprimitive md 2-closed group has a
    regular element of that prime order."""

    check_id = "CHK-S33"
    anchor = "a kernel of prime order p yields a regular element of order p"

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        if not G.is_transitive():
            return iter(())
        systems = (
            {"partition": Q.as_lists()}
            for Q in block_systems(G)
            if isprime(Q.class_size or 0)
        )
        return capped(systems, config)

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        facts = nmd_facts(G)
        facts["md"] = facts["transitive"] and not facts["nmd"]
        Q = PartitionOfV(params["partition"], G.degree)
        facts["prime_blocks"] = bool(isprime(Q.class_size or 0))
        if not (facts["md"] and facts["prime_blocks"]):
            return Evaluation(False, facts)
        facts["two_closed"] = lab_is_2_closed(G, config)[0]
        return Evaluation(facts["two_closed"], facts)

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        Q = PartitionOfV(params["partition"], G.degree)
        kernel = partition_action(G, Q).kernel
        p = Q.class_size or 0
        report = find_semiregular_of_order(kernel, p)
        facts = element_facts(
            report.found, report.witness_images(), report.witness_cycle_len
        )
        facts["kernel_order"] = kernel.order
        return Evaluation(report.found, facts)

    def verify_facts(
        self,
        G: PermutationGroup,
        params: Params,
        witness: Witness,
        status: CheckStatus,
        config: LabConfig,
    ) -> bool:
        if not super().verify_facts(G, params, witness, status, config):
            return False
        p = len(params["partition"][0])
        return not witness["conclusion"]["found"] or _uniform_member(G, witness, p)
