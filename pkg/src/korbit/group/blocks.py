import logging
from dataclasses import dataclass
from typing import List, Literal, Optional

import numpy as np

from ..exceptions import InvalidPartitionError, PreconditionError
from .group import PermutationGroup
from .partition import PartitionOfV
from .union_find import UnionFind

logger = logging.getLogger(__name__)


def minimal_block(G: PermutationGroup, a: int, b: int) -> PartitionOfV:
    """Finest G-invariant partition in which a and b share a class.

    Union-find closure of the pair (a, b) under the generators: every pair
    that merges two classes is queued and pushed through each generator.
    """
    uf: UnionFind[int] = UnionFind(range(1, G.degree + 1))
    queue = [(a, b)] if uf.union(a, b) else []
    while queue:
        x, y = queue.pop()
        for g in G.generators:
            gx, gy = g(x), g(y)
            if uf.union(gx, gy):
                queue.append((gx, gy))
    return PartitionOfV(uf.classes(), G.degree)


def join(P: PartitionOfV, Q: PartitionOfV) -> PartitionOfV:
    """Finest partition refined by both P and Q."""
    uf: UnionFind[int] = UnionFind(range(1, P.degree + 1))
    for c in (*P.classes, *Q.classes):
        first = min(c)
        for x in c:
            uf.union(first, x)
    return PartitionOfV(uf.classes(), P.degree)


def _require_transitive(G: PermutationGroup) -> None:
    if not G.is_transitive():
        raise PreconditionError("group must be transitive")


def block_systems(G: PermutationGroup) -> List[PartitionOfV]:
    """All nontrivial G-invariant partitions of V.

    Minimal blocks of the pairs (1, v) are closed under pairwise joins; every
    block system arises as the join of the minimal blocks of the points in
    the class of 1.

    Returns:
        List[PartitionOfV]: sorted by class size, then lexicographically.
    """
    _require_transitive(G)
    found = {minimal_block(G, 1, v) for v in range(2, G.degree + 1)}
    frontier = set(found)
    while frontier:
        fresh = set()
        for P in frontier:
            for Q in list(found):
                J = join(P, Q)
                if J not in found:
                    fresh.add(J)
        found |= fresh
        frontier = fresh
    systems = [P for P in found if not P.is_trivial()]
    return sorted(systems, key=PartitionOfV.sort_key)


def is_primitive(G: PermutationGroup) -> bool:
    return G.is_transitive() and not block_systems(G)


def is_invariant(G: PermutationGroup, Q: PartitionOfV) -> bool:
    classes = set(Q.classes)
    return all(frozenset(g(x) for x in c) in classes for g in G.generators for c in Q)


@dataclass(frozen=True)
class PartitionAction:
    """Induced action of a group on the classes of an invariant partition."""

    source: PermutationGroup
    partition: PartitionOfV
    image: PermutationGroup
    kernel: PermutationGroup

    @property
    def faithful(self) -> bool:
        return self.kernel.order == 1


def partition_action(G: PermutationGroup, Q: PartitionOfV) -> PartitionAction:
    """Action of G on the class indices of Q, with its kernel.

    Raises:
        InvalidPartitionError: Q is not a G-invariant partition of V.
    """
    if Q.degree != G.degree:
        raise InvalidPartitionError(
            f"partition of 1..{Q.degree} for a group of degree {G.degree}"
        )
    if not is_invariant(G, Q):
        raise InvalidPartitionError(f"{Q!r} is not invariant under the group")
    labels = np.empty(G.degree, dtype=np.int64)
    for index, c in enumerate(Q):
        labels[[x - 1 for x in c]] = index
    reps = np.array([min(c) - 1 for c in Q], dtype=np.int64)
    induced = labels[G.element_array[:, reps]]
    image = PermutationGroup.from_array(induced, len(Q))
    in_kernel = (induced == np.arange(len(Q))).all(axis=1)
    kernel = PermutationGroup.from_array(G.element_array[in_kernel], G.degree)
    return PartitionAction(G, Q, image, kernel)


@dataclass(frozen=True)
class MdClassification:
    kind: Literal["md", "nmd"]
    witness: Optional[PartitionOfV] = None

    @property
    def is_nmd(self) -> bool:
        return self.kind == "nmd"


def faithful_systems(G: PermutationGroup) -> List[PartitionOfV]:
    return [Q for Q in block_systems(G) if partition_action(G, Q).faithful]


def classify_md(G: PermutationGroup) -> MdClassification:
    """md unless some nontrivial block system carries a faithful action.

    The nmd witness is the coarsest faithful system (largest classes, first in
    block-system order among equals).
    """
    faithful = faithful_systems(G)
    if not faithful:
        return MdClassification("md")
    largest = max(len(Q.classes[0]) for Q in faithful)
    witness = next(Q for Q in faithful if len(Q.classes[0]) == largest)
    logger.debug("nmd witness %r", witness)
    return MdClassification("nmd", witness)
