import logging
from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterator, List, Set, Tuple

import numpy as np

from ..config import DEFAULT_CAPS
from .conjugacy import class_representatives, conjugate_keys, conjugate_subgroups
from .group import PermutationGroup, close_rows, normalizer, row_codes
from .permutation import Permutation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubgroupLattice:
    """Subgroups of a group up to conjugacy.

    `complete` is False when the lattice was truncated (only cyclic
    representatives are listed in that case).
    """

    ambient: PermutationGroup
    groups: Tuple[PermutationGroup, ...]
    complete: bool

    def __iter__(self) -> Iterator[PermutationGroup]:
        return iter(self.groups)

    def __len__(self) -> int:
        return len(self.groups)

    def orders(self) -> List[int]:
        return [H.order for H in self.groups]


class ConjugacyRegistry:
    """Keeps one representative per conjugacy class of subgroups of an ambient."""

    def __init__(self, ambient: PermutationGroup) -> None:
        self.ambient = ambient
        self.known: Set[bytes] = set()
        self.representatives: List[PermutationGroup] = []

    def add(self, H: PermutationGroup) -> bool:
        if H.key in self.known:
            return False
        self.known.update(conjugate_keys(self.ambient, H))
        self.representatives.append(H)
        return True


def cyclic_rows(g: Permutation) -> np.ndarray:
    return close_rows(np.array([g.array0]), g.degree)


def cyclic_subgroup(g: Permutation) -> PermutationGroup:
    return PermutationGroup.from_array(cyclic_rows(g), g.degree, [g])


def derived_subgroup(G: PermutationGroup) -> PermutationGroup:
    """Commutator subgroup: normal closure of the generator commutators."""
    gens = G.generators
    commutators = {
        a.inverse() * b.inverse() * a * b for a in gens for b in gens if a != b
    }
    seeds = {c.conjugate(g) for c in commutators for g in G}
    seeds.discard(G.identity)
    rows = close_rows(np.array([s.array0 for s in sorted(seeds)]), G.degree)
    return PermutationGroup.from_array(rows, G.degree)


def perfect_residual(G: PermutationGroup) -> PermutationGroup:
    current = G
    while True:
        derived = derived_subgroup(current)
        if derived.order == current.order:
            return current
        current = derived


def is_perfect(G: PermutationGroup) -> bool:
    return derived_subgroup(G).order == G.order


def perfect_seeds(G: PermutationGroup) -> List[PermutationGroup]:
    """Nontrivial perfect two-generated subgroups of G.

    They all live in the perfect residual R; the first generator runs over
    G-class representatives in R, the second over R.
    """
    R = perfect_residual(G)
    if R.order == 1:
        return []
    seen: Set[bytes] = set()
    seeds = []
    firsts = [x for x in class_representatives(G) if x in R and not x.is_identity()]
    for x in firsts:
        for y in R:
            if x * y == y * x:
                continue
            rows = close_rows(np.array([x.array0, y.array0]), G.degree)
            H = PermutationGroup.from_array(rows, G.degree, [x, y])
            if H.key in seen:
                continue
            seen.add(H.key)
            if is_perfect(H):
                seeds.append(H)
    logger.debug("perfect residual of order %d: %d seeds", R.order, len(seeds))
    return seeds


def _extensions(
    G: PermutationGroup, K: PermutationGroup
) -> Iterator[PermutationGroup]:
    """Subgroups K<g> for g normalizing K, one per distinct product."""
    N = normalizer(G, K)
    K_rows = K.element_array
    covered = set(row_codes(K_rows, G.degree).tolist())
    for g in N:
        code = int(row_codes(np.array(g.array0), G.degree)[0])
        if code in covered:
            continue
        powers = cyclic_rows(g)
        rows = np.concatenate([K_rows[:, c] for c in powers])
        E = PermutationGroup.from_array(rows, G.degree, [*K.generators, g])
        # K g^j for j coprime to the order of gK generate the same extension.
        in_K = K.contains_rows(powers)
        m = int(np.flatnonzero(in_K[1:])[0]) + 1 if in_K[1:].any() else len(powers)
        for j in range(1, m):
            if gcd(j, m) == 1:
                coset = K_rows[:, powers[j]]
                covered.update(row_codes(coset, G.degree).tolist())
        yield E


def subgroups(
    G: PermutationGroup, order_cap: int = DEFAULT_CAPS.subgroup_cap
) -> SubgroupLattice:
    """All subgroups of G up to conjugacy in G, by cyclic extension.

    Layers start from the trivial group and the perfect two-generated
    subgroups; each layer extends its members by elements of their
    normalizers. Groups larger than `order_cap` get only their cyclic
    subgroups, flagged incomplete.

    Returns:
        SubgroupLattice: representatives sorted by (order, element key).
    """
    assert order_cap > 0, "order_cap must be larger than 0!"
    registry = ConjugacyRegistry(G)
    if G.order > order_cap:
        logger.warning(
            "group of order %d exceeds the subgroup cap %d; cyclic subgroups only",
            G.order,
            order_cap,
        )
        for g in class_representatives(G):
            registry.add(cyclic_subgroup(g))
        return _lattice(G, registry, complete=False)

    layer = [PermutationGroup.trivial(G.degree)]
    registry.add(layer[0])
    for seed in perfect_seeds(G):
        if registry.add(seed):
            layer.append(seed)
    depth = 0
    while layer:
        depth += 1
        nxt = []
        for K in layer:
            for E in _extensions(G, K):
                if registry.add(E):
                    nxt.append(E)
        logger.debug("cyclic extension layer %d: %d new classes", depth, len(nxt))
        layer = nxt
    return _lattice(G, registry, complete=True)


def _lattice(
    G: PermutationGroup, registry: ConjugacyRegistry, complete: bool
) -> SubgroupLattice:
    groups = sorted(registry.representatives, key=lambda H: (H.order, H.key))
    return SubgroupLattice(G, tuple(groups), complete)


def all_subgroups(lattice: SubgroupLattice) -> List[PermutationGroup]:
    """Every subgroup (conjugates expanded), ordered like the lattice."""
    result = []
    for H in lattice:
        result.extend(conjugate_subgroups(lattice.ambient, H))
    return result

