from .blocks import (
    MdClassification,
    PartitionAction,
    block_systems,
    classify_md,
    is_primitive,
    minimal_block,
    partition_action,
)
from .conjugacy import (
    are_conjugate,
    conjugacy_classes,
    conjugate_subgroups,
    find_conjugator,
)
from .group import (
    PermutationGroup,
    close_group,
    generated_subgroup,
    intersection,
    is_normal,
    normalizer,
    orbits,
    stabilizer,
    symmetric_group,
)
from .io import parse_group_text, read_group_file, write_group_file
from .partition import PartitionOfV
from .permutation import (
    CycleType,
    Permutation,
    compose,
    cycle_type,
    inverse,
    order_of,
    parse_permutation,
)
from .lattice import SubgroupLattice, all_subgroups, derived_subgroup, subgroups

__all__ = [
    "CycleType",
    "MdClassification",
    "PartitionAction",
    "PartitionOfV",
    "Permutation",
    "PermutationGroup",
    "SubgroupLattice",
    "all_subgroups",
    "are_conjugate",
    "block_systems",
    "classify_md",
    "close_group",
    "compose",
    "conjugacy_classes",
    "conjugate_subgroups",
    "cycle_type",
    "derived_subgroup",
    "find_conjugator",
    "generated_subgroup",
    "intersection",
    "inverse",
    "is_normal",
    "is_primitive",
    "minimal_block",
    "normalizer",
    "orbits",
    "order_of",
    "parse_group_text",
    "parse_permutation",
    "partition_action",
    "read_group_file",
    "stabilizer",
    "subgroups",
    "symmetric_group",
    "write_group_file",
]
