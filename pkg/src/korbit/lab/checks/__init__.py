from .blocks import (
    KernelRegularCheck,
    NmdBlockStabilizerCheck,
    NmdRegularCheck,
    NmdTwoClosedCheck,
    PrimePowerBlocksCheck,
    PrimePowerRefinementCheck,
)
from .controls import FixedPointFreeCheck
from .korbits import (
    ElementaryCoherentCheck,
    IncoherentAutCheck,
    TranslatePartitionCheck,
)
from .primitive import MdSubgroupClosureCheck, NoImprimitiveSubgroupCheck
from .propositions import (
    BlockKernelCheck,
    CosetNormalityCheck,
    MeetJoinCheck,
    StabilizerQuotientCheck,
)
from .splits import AutomorphicPartitionCheck, MultiSplitCheck, PairSplitCheck

__all__ = [
    "AutomorphicPartitionCheck",
    "BlockKernelCheck",
    "CosetNormalityCheck",
    "ElementaryCoherentCheck",
    "FixedPointFreeCheck",
    "IncoherentAutCheck",
    "KernelRegularCheck",
    "MdSubgroupClosureCheck",
    "MeetJoinCheck",
    "MultiSplitCheck",
    "NmdBlockStabilizerCheck",
    "NmdRegularCheck",
    "NmdTwoClosedCheck",
    "NoImprimitiveSubgroupCheck",
    "PairSplitCheck",
    "PrimePowerBlocksCheck",
    "PrimePowerRefinementCheck",
    "StabilizerQuotientCheck",
    "TranslatePartitionCheck",
]
