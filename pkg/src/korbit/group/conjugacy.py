import itertools
import logging
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .group import (
    PermutationGroup,
    conjugate_rows,
    conjugates_by_all,
    group_key,
    row_codes,
)
from .permutation import CycleType, Permutation

logger = logging.getLogger(__name__)

_CHUNK = 2_000_000


def conjugacy_classes(G: PermutationGroup) -> List[List[Permutation]]:
    """Conjugacy classes of G, each sorted, ordered by their least element."""
    remaining = np.ones(G.order, dtype=bool)
    classes = []
    for i, x in enumerate(G.elements):
        if not remaining[i]:
            continue
        conjugates = conjugates_by_all(np.array(x.array0), G)
        codes = np.unique(row_codes(conjugates, G.degree))
        members = np.searchsorted(G.codes, codes)
        remaining[members] = False
        classes.append([G.elements[j] for j in members])
    return classes


def class_representatives(G: PermutationGroup) -> List[Permutation]:
    return [c[0] for c in conjugacy_classes(G)]


def _invariants(G: PermutationGroup) -> Tuple[object, ...]:
    cycle_types = Counter(g.cycle_type() for g in G)
    orbit_sizes = sorted(len(o) for o in G.orbits())
    return G.order, tuple(sorted(cycle_types.items(), key=repr)), tuple(orbit_sizes)


def conjugate_keys(
    G: PermutationGroup, H: PermutationGroup
) -> Dict[bytes, np.ndarray]:
    """Keys of all distinct conjugates xHx^-1 (x in G) with one conjugator each."""
    keys: Dict[bytes, np.ndarray] = {}
    rows, n = H.element_array, H.degree
    X, X_inv = G.element_array, G.inverse_array
    if G.codes.dtype == object:
        for x in X:
            keys.setdefault(group_key(conjugate_rows(rows, x), n), x)
        return keys
    chunk = max(1, _CHUNK // (H.order * n))
    for start in range(0, G.order, chunk):
        xs, xs_inv = X[start : start + chunk], X_inv[start : start + chunk]
        # conjugated[x, r, i] = x[h_r[x^-1[i]]]
        inner = rows[:, xs_inv].transpose(1, 0, 2)
        conjugated = xs[np.arange(len(xs))[:, None, None], inner]
        codes = np.sort(row_codes(conjugated, n).reshape(len(xs), H.order), axis=1)
        for x, row in zip(xs, codes):
            keys.setdefault(row.tobytes(), x)
    return keys


def conjugate_subgroups(
    G: PermutationGroup, H: PermutationGroup
) -> List[PermutationGroup]:
    """All distinct conjugates of H inside G, ordered by element key."""
    conjugators = conjugate_keys(G, H)
    return [
        PermutationGroup.from_array(
            conjugate_rows(H.element_array, conjugators[key]), H.degree
        )
        for key in sorted(conjugators)
    ]


def _extend(
    orbits: Sequence[List[int]],
    hs: Sequence[np.ndarray],
    ks: Sequence[np.ndarray],
    mapping: np.ndarray,
    used: np.ndarray,
    index: int,
) -> Optional[np.ndarray]:
    """Extend a partial conjugator orbit by orbit; x h x^-1 = k for each pair."""
    if index == len(orbits):
        return mapping
    orbit = orbits[index]
    base = orbit[0]
    for target in np.flatnonzero(~used):
        x = mapping.copy()
        taken = used.copy()
        x[base] = target
        taken[target] = True
        queue = [base]
        ok = True
        while queue and ok:
            p = queue.pop()
            for h, k in zip(hs, ks):
                p2, q2 = h[p], k[x[p]]
                if x[p2] < 0:
                    if taken[q2]:
                        ok = False
                        break
                    x[p2] = q2
                    taken[q2] = True
                    queue.append(p2)
                elif x[p2] != q2:
                    ok = False
                    break
        if ok:
            found = _extend(orbits, hs, ks, x, taken, index + 1)
            if found is not None:
                return found
    return None


def find_conjugator(
    H: PermutationGroup, K: PermutationGroup
) -> Optional[Permutation]:
    """Some x in S_n with x H x^-1 = K, or None.

    Generator images are tried up to K-conjugacy for the first generator and
    over cycle-type matches for the rest; each choice is propagated point by
    point along the orbits of H.
    """
    if H.degree != K.degree or _invariants(H) != _invariants(K):
        return None
    if H.key == K.key:
        return Permutation.identity(H.degree)
    gens = H.generators
    by_type: Dict[CycleType, List[Permutation]] = {}
    for k in K:
        by_type.setdefault(k.cycle_type(), []).append(k)
    reps = set(class_representatives(K))
    choices = [
        [k for k in by_type.get(h.cycle_type(), []) if index > 0 or k in reps]
        for index, h in enumerate(gens)
    ]
    orbits = [sorted(x - 1 for x in o) for o in H.orbits()]
    hs = [np.array(h.array0) for h in gens]
    n = H.degree
    for images in itertools.product(*choices):
        ks = [np.array(k.array0) for k in images]
        x = _extend(
            orbits, hs, ks, np.full(n, -1, dtype=np.int64), np.zeros(n, bool), 0
        )
        if x is not None:
            return Permutation._trusted(tuple(int(v) for v in x))
    return None


def are_conjugate(
    H: PermutationGroup,
    K: PermutationGroup,
    ambient: Optional[PermutationGroup] = None,
) -> bool:
    """Whether K = x H x^-1 for some x in ambient (S_n when ambient is None)."""
    if H.degree != K.degree or H.order != K.order:
        return False
    if ambient is None:
        return find_conjugator(H, K) is not None
    if _invariants(H) != _invariants(K):
        return False
    return K.key in conjugate_keys(ambient, H)
