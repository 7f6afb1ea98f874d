import logging
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..config import DEFAULT_CAPS
from ..exceptions import PreconditionError
from ..group import subgroups
from ..group.group import KTuple
from .automorphic import KSetAutomorphisms, aut_kset
from .orbit import KOrbit

logger = logging.getLogger(__name__)


class Coherence(str, Enum):
    COHERENT = "COHERENT"
    INCOHERENT = "INCOHERENT"
    TRIVIAL_FULL = "TRIVIAL_FULL"
    DEGENERATE = "DEGENERATE"


class Ternary(str, Enum):
    TRUE = "TRUE"
    FALSE = "FALSE"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class CoherenceVerdict:
    kind: Coherence
    components: Tuple[FrozenSet[int], ...]


def coordinate_components(tuples: Iterable[KTuple]) -> Tuple[FrozenSet[int], ...]:
    """Connected components of the points, joined through shared coordinate sets.

    Components are ordered by their least point.
    """
    sets = sorted({frozenset(t) for t in tuples}, key=sorted)
    points = sorted(set().union(*sets)) if sets else []
    index = {p: i for i, p in enumerate(points)}
    rows, cols = [], []
    for co in sets:
        members = sorted(index[p] for p in co)
        rows += members[:-1]
        cols += members[1:]
    size = len(points)
    graph = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(size, size))
    count, labels = connected_components(graph, directed=False)
    components = [
        frozenset(points[i] for i in np.flatnonzero(labels == c)) for c in range(count)
    ]
    return tuple(sorted(components, key=min))


def _classify(tuples: Iterable[KTuple]) -> CoherenceVerdict:
    tuples = list(tuples)
    components = coordinate_components(tuples)
    if len(components) >= 2:
        return CoherenceVerdict(Coherence.INCOHERENT, components)
    if len({frozenset(t) for t in tuples}) >= 2:
        return CoherenceVerdict(Coherence.COHERENT, components)
    return CoherenceVerdict(Coherence.DEGENERATE, components)


def coherence(X: KOrbit) -> CoherenceVerdict:
    """Coherence type of a k-orbit.

    k = 1 gives DEGENERATE, k = n gives TRIVIAL_FULL; an orbit made of a
    single k-block is DEGENERATE as well.
    """
    if X.k == 1:
        return CoherenceVerdict(Coherence.DEGENERATE, coordinate_components(X))
    if X.k == X.degree:
        return CoherenceVerdict(Coherence.TRIVIAL_FULL, (X.ground,))
    return _classify(X)


def is_elementary_coherent(
    X: KOrbit,
    aut: Optional[KSetAutomorphisms] = None,
    subgroup_cap: int = DEFAULT_CAPS.subgroup_cap,
    engine_cap: int = DEFAULT_CAPS.engine_cap,
) -> Ternary:
    """No suborbit with proper ground support is coherent or incoherent.

    Suborbits are orbits on X of subgroups of Aut(X); conjugacy
    representatives suffice since conjugation moves suborbits without
    changing their type or support size. UNKNOWN when the subgroup lattice
    of Aut(X) is truncated and no offending suborbit was met.

    Raises:
        PreconditionError: X is not coherent.
    """
    if coherence(X).kind is not Coherence.COHERENT:
        raise PreconditionError("elementary coherence needs a coherent k-orbit")
    aut = aut if aut is not None else aut_kset(X, engine_cap=engine_cap)
    tuples = aut.relabeled()
    ground_size = len(aut.ground)
    lattice = subgroups(aut.group, subgroup_cap)
    for A in lattice:
        for Y in suborbits(A.element_array, tuples):
            support = set().union(*(set(t) for t in Y))
            if len(support) == ground_size:
                continue
            if _classify(Y).kind in (Coherence.COHERENT, Coherence.INCOHERENT):
                logger.debug("suborbit %s of order-%d subgroup offends", Y, A.order)
                return Ternary.FALSE
    return Ternary.TRUE if lattice.complete else Ternary.UNKNOWN


def suborbits(elements: np.ndarray, tuples: np.ndarray) -> List[List[KTuple]]:
    """Orbits of a group (0-based element rows) on 0-based tuple rows.

    Returned tuples are 1-based.
    """
    remaining = {tuple(t) for t in (tuples + 1).tolist()}
    result = []
    for t in sorted(remaining):
        if t not in remaining:
            continue
        images = np.unique(elements[:, np.array(t) - 1] + 1, axis=0)
        orbit = [tuple(r) for r in images.tolist()]
        remaining.difference_update(orbit)
        result.append(orbit)
    return result
