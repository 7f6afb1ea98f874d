import logging
from functools import cached_property
from typing import (
    AbstractSet,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np

from ..config import DEFAULT_CAPS
from ..exceptions import (
    ContainmentError,
    DegreeMismatchError,
    GroupTooLargeError,
    PreconditionError,
)
from .partition import PartitionOfV
from .permutation import Permutation
from .union_find import find_orbits

logger = logging.getLogger(__name__)

KTuple = Tuple[int, ...]
StabilizerTarget = Union[int, KTuple, AbstractSet[int], AbstractSet[KTuple]]


class PermutationGroup:
    """A permutation group of degree n with its fully enumerated element set.

    Elements are kept in canonical (lexicographic image) order, so every
    query over the group is deterministic.

    Args:
        degree (int): number of points n.
        generators (Sequence[Permutation]): generators; computed greedily
            from the elements when None.
        elements (Iterable[Permutation]): all group elements (trusted closed).
    """

    def __init__(
        self,
        degree: int,
        generators: Optional[Sequence[Permutation]],
        elements: Iterable[Permutation],
    ) -> None:
        assert degree > 0, "degree must be larger than 0!"
        self.degree = degree
        self.elements: Tuple[Permutation, ...] = tuple(sorted(set(elements)))
        self._generators = None if generators is None else tuple(generators)

    @classmethod
    def from_elements(
        cls, elements: Iterable[Permutation], degree: int
    ) -> "PermutationGroup":
        return cls(degree, None, elements)

    @classmethod
    def from_array(
        cls,
        array: np.ndarray,
        degree: int,
        generators: Optional[Sequence[Permutation]] = None,
    ) -> "PermutationGroup":
        """Group from a (trusted closed) matrix of 0-based image rows."""
        rows = np.unique(np.asarray(array, dtype=np.int64).reshape(-1, degree), axis=0)
        return cls(
            degree, generators, (Permutation._trusted(tuple(r)) for r in rows.tolist())
        )

    @classmethod
    def trivial(cls, degree: int) -> "PermutationGroup":
        return cls(degree, (), [Permutation.identity(degree)])

    @cached_property
    def generators(self) -> Tuple[Permutation, ...]:
        if self._generators is not None:
            return self._generators
        return greedy_generators(self.elements, self.degree)

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def element_set(self) -> FrozenSet[Permutation]:
        return frozenset(self.elements)

    @cached_property
    def element_array(self) -> np.ndarray:
        """0-based images, one row per element (order x n)."""
        return np.array([g.array0 for g in self.elements], dtype=np.int64).reshape(
            self.order, self.degree
        )

    @cached_property
    def inverse_array(self) -> np.ndarray:
        return np.argsort(self.element_array, axis=1)

    @cached_property
    def codes(self) -> np.ndarray:
        """Sorted integer codes of the elements (see `row_codes`)."""
        return row_codes(self.element_array, self.degree)

    @cached_property
    def key(self) -> bytes:
        """Hashable key identifying the element set."""
        return group_key(self.element_array, self.degree)

    @cached_property
    def index(self) -> Dict[Permutation, int]:
        return {g: i for i, g in enumerate(self.elements)}

    def contains_rows(self, rows: np.ndarray) -> np.ndarray:
        """Membership mask for a matrix of 0-based image rows."""
        return np.isin(row_codes(rows, self.degree), self.codes)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, item: object) -> bool:
        return item in self.element_set

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        return self.degree == other.degree and self.key == other.key

    def __hash__(self) -> int:
        return hash((self.degree, self.key))

    def __repr__(self) -> str:
        gens = ", ".join(g.to_cycle_string() for g in self.generators)
        return f"PermutationGroup(degree={self.degree}, order={self.order}, <{gens}>)"

    def orbit(self, point: int) -> FrozenSet[int]:
        images = np.unique(self.element_array[:, point - 1])
        return frozenset(int(x) + 1 for x in images)

    def orbits(self) -> PartitionOfV:
        return orbits(self)

    def is_transitive(self) -> bool:
        return self.degree == 1 or len(self.orbit(1)) == self.degree

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1 :])

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        return self.degree == other.degree and bool(
            other.contains_rows(self.element_array).all()
        )

    def to_images(self) -> List[List[int]]:
        return [list(g.images) for g in self.generators]


def row_codes(rows: np.ndarray, degree: int) -> np.ndarray:
    """Encode 0-based image rows as base-n integers, most significant first.

    Lexicographic order of rows equals numeric order of codes. Degrees whose
    codes overflow int64 fall back to Python integers.
    """
    rows = np.asarray(rows).reshape(-1, degree)
    if degree**degree < 2**62:
        weights = np.array(
            [degree ** (degree - 1 - j) for j in range(degree)], dtype=np.int64
        )
        return rows.astype(np.int64) @ weights
    return np.array(
        [
            sum(int(x) * degree ** (degree - 1 - j) for j, x in enumerate(r))
            for r in rows.tolist()
        ],
        dtype=object,
    )


def group_key(rows: np.ndarray, degree: int) -> bytes:
    codes = np.sort(row_codes(rows, degree))
    if codes.dtype == object:
        return repr(codes.tolist()).encode()
    return codes.tobytes()


def conjugate_rows(rows: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Rows of g x g^-1 for every row x (all 0-based)."""
    g_inv = np.argsort(g)
    return g[rows[:, g_inv]]


def conjugates_by_all(x: np.ndarray, G: PermutationGroup) -> np.ndarray:
    """Rows of g x g^-1 for every element g of G, in element order."""
    E = G.element_array
    return np.take_along_axis(E, x[G.inverse_array], axis=1)


def close_rows(
    generators: np.ndarray, degree: int, cap: Optional[int] = None
) -> np.ndarray:
    """Breadth-first closure of 0-based generator rows.

    Raises:
        GroupTooLargeError: more than `cap` elements were reached.
    """
    identity = np.arange(degree, dtype=np.int64)[None, :]
    gens = np.asarray(generators, dtype=np.int64).reshape(-1, degree)
    if gens.shape[0] == 0:
        return identity
    seen = row_codes(identity, degree)
    layers = [identity]
    frontier = identity
    total = 1
    while frontier.shape[0]:
        candidates = np.concatenate([g[frontier] for g in gens])
        codes, first = np.unique(row_codes(candidates, degree), return_index=True)
        fresh = ~np.isin(codes, seen)
        frontier = candidates[first[fresh]]
        seen = np.concatenate([seen, codes[fresh]])
        total += frontier.shape[0]
        if cap is not None and total > cap:
            raise GroupTooLargeError(
                f"closure exceeds {cap} elements", partial_count=total
            )
        layers.append(frontier)
    return np.concatenate(layers)


def greedy_generators(
    elements: Sequence[Permutation], degree: int
) -> Tuple[Permutation, ...]:
    """Pick generators in order of decreasing element order until they span."""
    target = len(set(elements))
    candidates = sorted(elements, key=lambda g: (-g.order(), g))
    gens: List[Permutation] = []
    span = {Permutation.identity(degree).array0}
    for g in candidates:
        if len(span) == target:
            break
        if g.array0 in span:
            continue
        gens.append(g)
        rows = close_rows(np.array([h.array0 for h in gens]), degree)
        span = {tuple(r) for r in rows.tolist()}
    return tuple(gens)


def close_group(
    generators: Iterable[Permutation],
    degree: Optional[int] = None,
    cap: int = DEFAULT_CAPS.element_cap,
) -> PermutationGroup:
    """Breadth-first closure of a generating set.

    Args:
        generators (Iterable[Permutation]): generators of equal degree.
        degree (Optional[int]): degree; required when there are no generators.
        cap (int): maximal element count before GroupTooLargeError.

    Returns:
        PermutationGroup: the generated group with enumerated elements.
    """
    assert cap >= 1, "cap must be larger than 0!"
    gens = list(dict.fromkeys(generators))
    if degree is None:
        if not gens:
            raise PreconditionError("degree is required for an empty generating set")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatchError(
                f"generator of degree {g.degree} in a group of degree {degree}"
            )
    gens = [g for g in gens if not g.is_identity()]
    rows = close_rows(np.array([g.array0 for g in gens]), degree, cap)
    logger.debug(
        "closed %d generators of degree %d: %d elements", len(gens), degree, len(rows)
    )
    return PermutationGroup.from_array(rows, degree, gens)


def symmetric_group(
    degree: int, cap: int = DEFAULT_CAPS.element_cap
) -> PermutationGroup:
    if degree == 1:
        return PermutationGroup.trivial(1)
    transposition = Permutation.from_cycles([(1, 2)], degree)
    cycle = Permutation.from_cycles([tuple(range(1, degree + 1))], degree)
    return close_group([transposition, cycle], degree, cap)


def orbits(G: PermutationGroup) -> PartitionOfV:
    classes = find_orbits(G.generators, range(1, G.degree + 1))
    return PartitionOfV(classes, G.degree)


def _tuple_image_codes(G: PermutationGroup, tuples: Sequence[KTuple]) -> np.ndarray:
    """Integer code of g(t) for every element g (rows) and tuple t (columns)."""
    E = G.element_array
    k = len(tuples[0])
    weights = np.array([G.degree**j for j in range(k)], dtype=np.int64)
    cols = np.array(tuples, dtype=np.int64) - 1
    return np.einsum("gtk,k->gt", E[:, cols], weights)


def _tuple_code(t: KTuple, degree: int) -> int:
    return sum((x - 1) * degree**j for j, x in enumerate(t))


def _filter(G: PermutationGroup, mask: np.ndarray) -> PermutationGroup:
    return PermutationGroup.from_array(G.element_array[mask], G.degree)


def point_stabilizer(G: PermutationGroup, point: int) -> PermutationGroup:
    return _filter(G, G.element_array[:, point - 1] == point - 1)


def pointwise_stabilizer(
    G: PermutationGroup, points: Sequence[int]
) -> PermutationGroup:
    if not points:
        return G
    cols = np.array(points, dtype=np.int64) - 1
    return _filter(G, (G.element_array[:, cols] == cols).all(axis=1))


def setwise_stabilizer(G: PermutationGroup, points: Iterable[int]) -> PermutationGroup:
    cols = np.array(sorted(set(points)), dtype=np.int64) - 1
    if cols.size == 0:
        return G
    return _filter(G, np.isin(G.element_array[:, cols], cols).all(axis=1))


def tuple_set_stabilizer(
    G: PermutationGroup, tuples: Iterable[KTuple]
) -> PermutationGroup:
    """{g in G : g(Y) = Y} for a set Y of k-tuples."""
    ys = sorted(set(tuples))
    if not ys:
        return G
    if G.degree ** len(ys[0]) < 2**62:
        codes = _tuple_image_codes(G, ys)
        targets = np.array([_tuple_code(t, G.degree) for t in ys], dtype=np.int64)
        return _filter(G, np.isin(codes, targets).all(axis=1))
    target_set = set(ys)
    return PermutationGroup.from_elements(
        (g for g in G if all(tuple(g(x) for x in t) in target_set for t in ys)),
        G.degree,
    )


def stabilizer(G: PermutationGroup, target: StabilizerTarget) -> PermutationGroup:
    """Stabilizer of a point, an ordered tuple, a point set or a set of tuples.

    Args:
        G (PermutationGroup): acting group.
        target: an int (point), a tuple of ints (pointwise stabilizer of its
            coordinates), a set of ints (setwise stabilizer) or a set of tuples
            (setwise stabilizer of the tuple set under the left action).

    Returns:
        PermutationGroup: the stabilizer with its own enumerated elements.
    """
    if isinstance(target, int):
        _check_points(G, [target])
        return point_stabilizer(G, target)
    if isinstance(target, tuple):
        _check_points(G, target)
        return pointwise_stabilizer(G, target)
    items = list(target)
    if items and isinstance(items[0], tuple):
        for t in items:
            _check_points(G, t)
        return tuple_set_stabilizer(G, items)
    _check_points(G, items)
    return setwise_stabilizer(G, items)


def _check_points(G: PermutationGroup, points: Iterable[int]) -> None:
    for x in points:
        if not 1 <= x <= G.degree:
            raise PreconditionError(f"point {x} outside 1..{G.degree}")


def is_normal(ambient: PermutationGroup, H: PermutationGroup) -> bool:
    """H normal in ambient (H assumed to be a subgroup)."""
    return all(h.conjugate(g) in H for g in ambient.generators for h in H.generators)


def normalizer(ambient: PermutationGroup, A: PermutationGroup) -> PermutationGroup:
    """{g in ambient : g A g^-1 = A}, by filtering the ambient elements."""
    if not A.is_subgroup_of(ambient):
        raise ContainmentError("subgroup is not contained in the ambient group")
    mask = np.ones(ambient.order, dtype=bool)
    for a in A.generators:
        mask &= A.contains_rows(conjugates_by_all(np.array(a.array0), ambient))
    return _filter(ambient, mask)


def generated_subgroup(
    *groups: PermutationGroup, cap: int = DEFAULT_CAPS.element_cap
) -> PermutationGroup:
    """The subgroup generated by the union of the given groups."""
    degree = groups[0].degree
    return close_group(
        (g for group in groups for g in group.generators), degree=degree, cap=cap
    )


def intersection(H: PermutationGroup, K: PermutationGroup) -> PermutationGroup:
    return _filter(H, K.contains_rows(H.element_array))
