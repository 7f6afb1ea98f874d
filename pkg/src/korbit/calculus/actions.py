from typing import AbstractSet, FrozenSet, Iterable, Sequence, Union, overload

from ..exceptions import (
    DegreeMismatchError,
    DiagonalViolationError,
    PreconditionError,
    UnsupportedRightActionError,
)
from ..group import Permutation
from ..group.group import KTuple


def coordinates(x: KTuple) -> FrozenSet[int]:
    """Co(x): the set of points of a tuple."""
    return frozenset(x)


def check_tuple(x: Sequence[int], degree: int) -> KTuple:
    """Validate a non-diagonal tuple of points in 1..degree."""
    x = tuple(int(v) for v in x)
    for v in x:
        if not 1 <= v <= degree:
            raise PreconditionError(f"point {v} outside 1..{degree}")
    if len(set(x)) != len(x):
        raise DiagonalViolationError(f"{x} repeats a coordinate")
    return x


def _act(g: Permutation, x: KTuple) -> KTuple:
    if any(not 1 <= v <= g.degree for v in x):
        raise DegreeMismatchError(f"{x} has points outside 1..{g.degree}")
    return tuple(g(v) for v in x)


@overload
def left_act(g: Permutation, x: KTuple) -> KTuple:
    ...


@overload
def left_act(g: Permutation, x: AbstractSet[KTuple]) -> FrozenSet[KTuple]:
    ...


def left_act(
    g: Permutation, x: Union[KTuple, AbstractSet[KTuple]]
) -> Union[KTuple, FrozenSet[KTuple]]:
    """Coordinate-wise image g.x of a tuple, or the image set of a tuple set."""
    if isinstance(x, tuple):
        return _act(g, x)
    return frozenset(_act(g, t) for t in x)


def right_act(x: KTuple, g: Permutation) -> KTuple:
    """Reindex positions: position i of the result holds x at position g(i).

    Only defined for tuples whose arity equals the degree of g.
    """
    if len(x) != g.degree:
        raise UnsupportedRightActionError(
            f"right action of degree {g.degree} on a {len(x)}-tuple"
        )
    return tuple(x[g(i) - 1] for i in range(1, len(x) + 1))


def concatenate(a: KTuple, b: KTuple) -> KTuple:
    """a followed by b; the coordinate sets must be disjoint."""
    overlap = set(a) & set(b)
    if overlap:
        raise DiagonalViolationError(f"{a} and {b} share {sorted(overlap)}")
    return tuple(a) + tuple(b)


def project(tuples: Iterable[KTuple], positions: Sequence[int]) -> FrozenSet[KTuple]:
    """Keep the coordinates at the given 1-based positions, collapsing duplicates."""
    tuples = list(tuples)
    if len(set(positions)) != len(positions):
        raise PreconditionError(f"positions {list(positions)} repeat")
    arity = min((len(t) for t in tuples), default=0)
    for i in positions:
        if tuples and not 1 <= i <= arity:
            raise PreconditionError(f"position {i} outside 1..{arity}")
    return frozenset(tuple(t[i - 1] for i in positions) for t in tuples)
