from typing import Iterator

from ...config import LabConfig
from ...group import Permutation, PermutationGroup
from ...regular import find_fpf_prime_power, is_prime_power
from ..base import BaseCheck, Evaluation
from ..result import CheckStatus, Params, Witness


class FixedPointFreeCheck(BaseCheck):
    """Control: a transitive group has a fixed-point-free prime-power element."""

    check_id = "CHK-FKS"
    anchor = "fixed-point-free prime-power element"
    control = True

    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        yield {}

    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        transitive = G.is_transitive()
        return Evaluation(transitive, {"transitive": transitive})

    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        report = find_fpf_prime_power(G)
        facts = {
            "found": report.found,
            "witness_images": report.witness_images(),
            "witness_order": report.witness_cycle_len,
        }
        return Evaluation(report.found, facts)

    def verify_facts(
        self,
        G: PermutationGroup,
        params: Params,
        witness: Witness,
        status: CheckStatus,
        config: LabConfig,
    ) -> bool:
        """Check a PASS witness element directly; rescan G for a FAIL."""
        if witness.get("hypothesis") != {"transitive": True} or not G.is_transitive():
            return False
        if status is CheckStatus.FAIL:
            return not find_fpf_prime_power(G).found
        images = witness.get("conclusion", {}).get("witness_images")
        if images is None:
            return False
        g = Permutation(images)
        return g in G and not g.fixed_points() and is_prime_power(g.order())
