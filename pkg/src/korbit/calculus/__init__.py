from .actions import (
    check_tuple,
    concatenate,
    coordinates,
    left_act,
    project,
    right_act,
)
from .automorphic import (
    AutomorphicStatus,
    KSetAutomorphisms,
    aut_kset,
    automorphic_numbers,
    automorphic_status,
    automorphic_subsets,
)
from .coherence import (
    Coherence,
    CoherenceVerdict,
    Ternary,
    coherence,
    coordinate_components,
    is_elementary_coherent,
    suborbits,
)
from .cosets import (
    CosetPartitionPair,
    LatticeOp,
    TupleCovering,
    coset_partitions,
    orbits_on,
    partition_meet_join,
)
from .orbit import (
    CoordinateFamily,
    KBlock,
    KOrbit,
    k_blocks,
    k_orbit,
    orb_k,
    read_korb,
    tuple_count,
    write_korb,
)

__all__ = [
    "AutomorphicStatus",
    "Coherence",
    "CoherenceVerdict",
    "CoordinateFamily",
    "CosetPartitionPair",
    "KBlock",
    "KOrbit",
    "KSetAutomorphisms",
    "LatticeOp",
    "Ternary",
    "TupleCovering",
    "aut_kset",
    "automorphic_numbers",
    "automorphic_status",
    "automorphic_subsets",
    "check_tuple",
    "coherence",
    "concatenate",
    "coordinate_components",
    "coordinates",
    "coset_partitions",
    "is_elementary_coherent",
    "k_blocks",
    "k_orbit",
    "left_act",
    "orb_k",
    "orbits_on",
    "partition_meet_join",
    "project",
    "read_korb",
    "right_act",
    "suborbits",
    "tuple_count",
    "write_korb",
]
