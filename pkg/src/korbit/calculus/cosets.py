import logging
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, Iterator, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..exceptions import CarrierMismatchError, ContainmentError, InvalidPartitionError
from ..group import PermutationGroup, stabilizer
from ..group.group import KTuple
from .orbit import KOrbit, k_orbit

logger = logging.getLogger(__name__)

TupleClass = FrozenSet[KTuple]


class TupleCovering:
    """Classes of tuples covering a carrier; a partition when they are disjoint."""

    __slots__ = ("classes",)

    def __init__(self, classes: Iterable[Iterable[KTuple]]) -> None:
        unique = {frozenset(c) for c in classes}
        unique.discard(frozenset())
        self.classes: Tuple[TupleClass, ...] = tuple(sorted(unique, key=min))

    def __iter__(self) -> Iterator[TupleClass]:
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TupleCovering):
            return NotImplemented
        return self.classes == other.classes

    def __hash__(self) -> int:
        return hash(self.classes)

    def __repr__(self) -> str:
        return f"TupleCovering({[sorted(c) for c in self.classes]})"

    @property
    def carrier(self) -> TupleClass:
        return frozenset().union(*self.classes)

    def is_partition(self) -> bool:
        return sum(len(c) for c in self.classes) == len(self.carrier)

    def refines(self, other: "TupleCovering") -> bool:
        return all(any(c <= d for d in other.classes) for c in self.classes)


@dataclass(frozen=True)
class CosetPartitionPair:
    """Left translates of Y and the orbits of Stab(Y) on the k-orbit X."""

    orbit: KOrbit
    block: TupleClass
    L: TupleCovering
    R: TupleCovering
    stabilizer: PermutationGroup
    stabilizer_transitive_on_block: bool

    @property
    def L_is_partition(self) -> bool:
        return self.L.is_partition()

    @property
    def L_equals_R(self) -> bool:
        return self.L == self.R


def _translates(G: PermutationGroup, Y: Tuple[KTuple, ...]) -> TupleCovering:
    cols = np.array(Y, dtype=np.int64) - 1
    images = G.element_array[:, cols] + 1
    return TupleCovering(
        {tuple(map(tuple, rows)) for rows in images.tolist()}
    )


def orbits_on(A: PermutationGroup, X: Iterable[KTuple]) -> TupleCovering:
    remaining = set(X)
    classes = []
    for t in sorted(remaining):
        if t in remaining:
            cls = set(map(tuple, (A.element_array[:, np.array(t) - 1] + 1).tolist()))
            remaining -= cls
            classes.append(cls)
    return TupleCovering(classes)


def coset_partitions(G: PermutationGroup, Y: Iterable[KTuple]) -> CosetPartitionPair:
    """The covering L = {g.Y} and the partition R by Stab(Y)-orbits of X.

    X is the k-orbit of G through the least tuple of Y.

    Raises:
        ContainmentError: Y is not inside one k-orbit of G.
    """
    block = tuple(sorted(set(Y)))
    if not block:
        raise ContainmentError("Y is empty")
    X = k_orbit(G, block[0])
    if not set(block) <= X.tuple_set:
        raise ContainmentError("Y is not contained in a single k-orbit")
    A = stabilizer(G, set(block))
    R = orbits_on(A, X)
    transitive = frozenset(block) in R.classes
    return CosetPartitionPair(
        X, frozenset(block), _translates(G, block), R, A, transitive
    )


class LatticeOp(str, Enum):
    MEET = "MEET"
    JOIN = "JOIN"


def partition_meet_join(
    P: TupleCovering, R: TupleCovering, op: LatticeOp
) -> TupleCovering:
    """Common refinement (MEET) or finest common coarsening (JOIN).

    Raises:
        CarrierMismatchError: P and R partition different tuple sets.
        InvalidPartitionError: an argument has overlapping classes.
    """
    if P.carrier != R.carrier:
        raise CarrierMismatchError("partitions have different carriers")
    for Q in (P, R):
        if not Q.is_partition():
            raise InvalidPartitionError(f"{Q!r} has overlapping classes")
    if LatticeOp(op) is LatticeOp.MEET:
        return TupleCovering(p & r for p in P for r in R)
    carrier = sorted(P.carrier)
    index = {t: i for i, t in enumerate(carrier)}
    rows, cols = [], []
    for cls in (*P.classes, *R.classes):
        members = sorted(index[t] for t in cls)
        rows += members[:-1]
        cols += members[1:]
    size = len(carrier)
    graph = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(size, size))
    _, labels = connected_components(graph, directed=False)
    classes: dict = {}
    for t, label in zip(carrier, labels):
        classes.setdefault(label, set()).add(t)
    return TupleCovering(classes.values())
