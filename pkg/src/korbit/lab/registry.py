from typing import Dict, Iterable, List

from .base import BaseCheck
from .checks import (
    AutomorphicPartitionCheck,
    BlockKernelCheck,
    CosetNormalityCheck,
    ElementaryCoherentCheck,
    FixedPointFreeCheck,
    IncoherentAutCheck,
    KernelRegularCheck,
    MdSubgroupClosureCheck,
    MeetJoinCheck,
    MultiSplitCheck,
    NmdBlockStabilizerCheck,
    NmdRegularCheck,
    NmdTwoClosedCheck,
    NoImprimitiveSubgroupCheck,
    PairSplitCheck,
    PrimePowerBlocksCheck,
    PrimePowerRefinementCheck,
    StabilizerQuotientCheck,
    TranslatePartitionCheck,
)

CHECKS: Dict[str, BaseCheck] = {
    check.check_id: check
    for check in (
        StabilizerQuotientCheck(),
        CosetNormalityCheck(),
        BlockKernelCheck(),
        MeetJoinCheck(),
        TranslatePartitionCheck(),
        IncoherentAutCheck(),
        ElementaryCoherentCheck(),
        PairSplitCheck(),
        MultiSplitCheck(),
        AutomorphicPartitionCheck(),
        NmdTwoClosedCheck(),
        NmdBlockStabilizerCheck(),
        PrimePowerBlocksCheck(),
        PrimePowerRefinementCheck(),
        MdSubgroupClosureCheck(),
        NoImprimitiveSubgroupCheck(),
        NmdRegularCheck(),
        KernelRegularCheck(),
        FixedPointFreeCheck(),
    )
}

CONTROL_CHECKS = tuple(cid for cid, check in CHECKS.items() if check.control)


def get_checks(check_ids: Iterable[str]) -> List[BaseCheck]:
    """Checks by id, in the order given; unknown ids raise KeyError."""
    check_ids = list(check_ids)
    unknown = [cid for cid in check_ids if cid not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    return [CHECKS[cid] for cid in check_ids]
