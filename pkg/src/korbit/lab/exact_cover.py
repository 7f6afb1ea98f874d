from typing import Dict, FrozenSet, Iterable, List, Optional, Set

Chunk = FrozenSet[int]


class ExactCoverSolver:
    """Algorithm X over a set of points and a family of candidate subsets.

    The uncovered point with the fewest candidates is branched on first;
    candidates are tried in sorted order so the first cover found is
    deterministic.
    """

    def __init__(
        self, universe: Iterable[int], subsets: Iterable[Iterable[int]]
    ) -> None:
        self.universe = frozenset(universe)
        self.subsets = sorted({frozenset(s) for s in subsets}, key=sorted)
        self.membership: Dict[int, List[Chunk]] = {x: [] for x in self.universe}
        for subset in self.subsets:
            if not subset <= self.universe:
                continue
            for x in subset:
                self.membership[x].append(subset)
        self.nodes = 0

    def solve(self) -> Optional[List[Chunk]]:
        if not all(self.membership.values()):
            return None
        return self._solve(set(), [])

    def _solve(self, covered: Set[int], selected: List[Chunk]) -> Optional[List[Chunk]]:
        self.nodes += 1
        if len(covered) == len(self.universe):
            return sorted(selected, key=sorted)
        options = {
            x: [s for s in self.membership[x] if covered.isdisjoint(s)]
            for x in self.universe
            if x not in covered
        }
        pivot = min(options, key=lambda x: (len(options[x]), x))
        for subset in options[pivot]:
            found = self._solve(covered | subset, selected + [subset])
            if found is not None:
                return found
        return None


def exact_cover(
    universe: Iterable[int], subsets: Iterable[Iterable[int]]
) -> Optional[List[Chunk]]:
    """First partition of `universe` into members of `subsets`, or None."""
    return ExactCoverSolver(universe, subsets).solve()
