import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple, Union

import numpy as np
from sympy import divisors

from ..closure import TupleSetStructure, automorphisms
from ..config import DEFAULT_CAPS
from ..group import Permutation, PermutationGroup, stabilizer, subgroups
from ..group.group import KTuple
from .actions import check_tuple
from .orbit import KOrbit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KSetAutomorphisms:
    """Aut(X) for a tuple set X, acting on its ground set relabeled 1..m.

    `ground[i]` is the original point carrying the label i + 1.
    """

    group: PermutationGroup
    ground: Tuple[int, ...]
    tuples: Tuple[KTuple, ...]
    transitive: bool

    @property
    def order(self) -> int:
        return self.group.order

    def relabeled(self) -> np.ndarray:
        """The tuples as 0-based rows over the relabeled ground."""
        position = {p: i for i, p in enumerate(self.ground)}
        return np.array(
            [[position[p] for p in t] for t in self.tuples], dtype=np.int64
        ).reshape(len(self.tuples), -1)

    def restrict(self, g: Permutation) -> Optional[Permutation]:
        """g restricted to the ground set, or None if g does not preserve it."""
        position = {p: i for i, p in enumerate(self.ground)}
        images = [g(p) for p in self.ground]
        if any(q not in position for q in images):
            return None
        return Permutation([position[q] + 1 for q in images])

    def contains_restriction(self, g: Permutation) -> bool:
        restricted = self.restrict(g)
        return restricted is not None and restricted in self.group


def aut_kset(
    X: Union[KOrbit, Iterable[KTuple]],
    engine_cap: int = DEFAULT_CAPS.engine_cap,
    element_cap: int = DEFAULT_CAPS.element_cap,
) -> KSetAutomorphisms:
    """All permutations of the ground set mapping the tuple set onto itself.

    Raises:
        EngineCapError: the ground set has more than `engine_cap` points.
    """
    tuples = tuple(sorted(set(X)))
    ground = tuple(sorted(set(itertools.chain.from_iterable(tuples))))
    position = {p: i for i, p in enumerate(ground)}
    rows = np.array([[position[p] for p in t] for t in tuples], dtype=np.int64)
    group = automorphisms(
        TupleSetStructure(rows, len(ground)), engine_cap, element_cap
    )
    orbit = np.unique(group.element_array[:, rows[0]], axis=0)
    return KSetAutomorphisms(group, ground, tuples, len(orbit) == len(tuples))


@dataclass(frozen=True)
class AutomorphicStatus:
    """Whether Co(alpha) is an orbit of a subgroup, with a witnessing subgroup.

    `restricted` flags a verdict reached under a witness-order restriction.
    """

    automorphic: bool
    witness: Optional[PermutationGroup]
    restricted: bool = False


def has_orbit(A: PermutationGroup, points: Iterable[int]) -> bool:
    points = sorted(set(points))
    return A.orbit(points[0]) == frozenset(points)


def automorphic_status(
    G: PermutationGroup,
    alpha: KTuple,
    max_witness_order: Optional[int] = None,
    subgroup_cap: int = DEFAULT_CAPS.subgroup_cap,
) -> AutomorphicStatus:
    """alpha is automorphic iff the setwise stabilizer of Co(alpha) is transitive on it.

    With `max_witness_order`, only subgroups of at most that order count as
    witnesses; the smallest such subgroup of the stabilizer is returned.
    """
    alpha = check_tuple(alpha, G.degree)
    co = set(alpha)
    S = stabilizer(G, co)
    if not has_orbit(S, co):
        return AutomorphicStatus(False, None)
    if max_witness_order is None or S.order <= max_witness_order:
        return AutomorphicStatus(True, S)
    for A in subgroups(S, subgroup_cap):
        if A.order > max_witness_order:
            break
        if has_orbit(A, co):
            return AutomorphicStatus(True, A, restricted=True)
    return AutomorphicStatus(False, None, restricted=True)


def automorphic_subsets(G: PermutationGroup, k: int) -> List[Tuple[int, ...]]:
    """All k-subsets of V that are orbits of some subgroup of G."""
    return [
        subset
        for subset in itertools.combinations(range(1, G.degree + 1), k)
        if has_orbit(stabilizer(G, set(subset)), subset)
    ]


def automorphic_numbers(G: PermutationGroup) -> List[int]:
    """Sizes of subgroup orbits that divide |G|, sorted.

    A k-subset is a subgroup orbit iff its setwise stabilizer is transitive on
    it, so each divisor k <= n is decided by a scan of k-subsets.
    """
    numbers = []
    for k in divisors(G.order):
        if k > G.degree:
            break
        subsets = itertools.combinations(range(1, G.degree + 1), k)
        if any(has_orbit(stabilizer(G, set(s)), s) for s in subsets):
            numbers.append(int(k))
    return numbers
