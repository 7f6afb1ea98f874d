from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

from ..exceptions import InvalidPartitionError


class PartitionOfV:
    """A partition of the point set V = {1..n}.

    Classes are stored as frozensets in canonical order (by least point).
    """

    __slots__ = ("degree", "classes")

    def __init__(self, classes: Iterable[Iterable[int]], degree: int) -> None:
        frozen = [frozenset(c) for c in classes]
        if any(not c for c in frozen):
            raise InvalidPartitionError("partition classes must be nonempty")
        union = set().union(*frozen) if frozen else set()
        if sum(len(c) for c in frozen) != len(union) or union != set(
            range(1, degree + 1)
        ):
            raise InvalidPartitionError(
                f"classes {sorted(map(sorted, frozen))} do not partition 1..{degree}"
            )
        self.degree = degree
        self.classes: Tuple[FrozenSet[int], ...] = tuple(sorted(frozen, key=min))

    def __iter__(self) -> Iterator[FrozenSet[int]]:
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartitionOfV):
            return NotImplemented
        return self.degree == other.degree and self.classes == other.classes

    def __hash__(self) -> int:
        return hash((self.degree, self.classes))

    def __repr__(self) -> str:
        return f"PartitionOfV({self.as_lists()})"

    def is_trivial(self) -> bool:
        return len(self.classes) in (1, self.degree)

    def class_of(self, point: int) -> FrozenSet[int]:
        for c in self.classes:
            if point in c:
                return c
        raise KeyError(point)

    def index_of(self, point: int) -> int:
        for index, c in enumerate(self.classes):
            if point in c:
                return index
        raise KeyError(point)

    @property
    def class_size(self) -> Optional[int]:
        """Common class size, or None when classes differ in size."""
        sizes = {len(c) for c in self.classes}
        return sizes.pop() if len(sizes) == 1 else None

    def refines(self, other: "PartitionOfV") -> bool:
        """True if every class of self lies inside a class of other."""
        return all(any(c <= d for d in other.classes) for c in self.classes)

    def as_lists(self) -> List[List[int]]:
        return [sorted(c) for c in self.classes]

    def sort_key(self) -> Tuple[int, List[List[int]]]:
        return (max(len(c) for c in self.classes), self.as_lists())

    @classmethod
    def from_lists(cls, classes: Iterable[Iterable[int]]) -> "PartitionOfV":
        classes = [list(c) for c in classes]
        return cls(classes, sum(len(c) for c in classes))
