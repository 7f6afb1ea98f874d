from typing import Callable, Dict, Generic, Hashable, Iterable, List, Set, TypeVar

T = TypeVar("T", bound=Hashable)


class UnionFind(Generic[T]):
    """Disjoint sets with union by rank and path compression."""

    def __init__(self, items: Iterable[T]) -> None:
        self.parent: Dict[T, T] = {x: x for x in items}
        self.rank: Dict[T, int] = {x: 0 for x in self.parent}

    def find(self, x: T) -> T:
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x: T, y: T) -> bool:
        """Merge the classes of x and y; return False if they already coincide."""
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        return True

    def classes(self) -> List[Set[T]]:
        groups: Dict[T, Set[T]] = {}
        for x in self.parent:
            groups.setdefault(self.find(x), set()).add(x)
        return list(groups.values())


def find_orbits(
    gens: Iterable[Callable[[T], T]], space: Iterable[T]
) -> List[Set[T]]:
    """Orbits of the group generated by `gens` acting on `space`."""
    space = list(space)
    uf: UnionFind[T] = UnionFind(space)
    for g in gens:
        for x in space:
            uf.union(x, g(x))
    return uf.classes()
