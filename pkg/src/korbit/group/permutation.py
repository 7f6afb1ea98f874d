import re
from collections import Counter
from dataclasses import dataclass
from functools import reduce, total_ordering
from math import lcm
from typing import Dict, Iterable, List, Sequence, Tuple

from ..exceptions import DegreeMismatchError, MalformedPermutationError

_CYCLE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths, fixed points counted as 1-cycles.

    `counts` holds (length, multiplicity) pairs sorted by length.
    """

    counts: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "CycleType":
        return cls(tuple(sorted(Counter(lengths).items())))

    @property
    def uniform(self) -> bool:
        return len(self.counts) == 1

    @property
    def degree(self) -> int:
        return sum(length * mult for length, mult in self.counts)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.counts)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{ln}:{m}" for ln, m in self.counts) + "}"


@total_ordering
class Permutation:
    """A bijection of V = {1..n}.

    Points are 1-based in every public method; images are kept 0-based
    internally. Multiplication applies the right operand first:
    `(p * q)(x) == p(q(x))`.
    """

    __slots__ = ("_images", "_hash")

    def __init__(self, images: Sequence[int]) -> None:
        degree = len(images)
        if degree == 0 or sorted(images) != list(range(1, degree + 1)):
            raise MalformedPermutationError(
                f"{list(images)} is not a permutation of 1..{degree}"
            )
        self._images: Tuple[int, ...] = tuple(int(x) - 1 for x in images)
        self._hash = hash(self._images)

    @classmethod
    def _trusted(cls, images0: Tuple[int, ...]) -> "Permutation":
        obj = cls.__new__(cls)
        obj._images = images0
        obj._hash = hash(images0)
        return obj

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        assert degree > 0, "degree must be larger than 0!"
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(
        cls, cycles: Iterable[Sequence[int]], degree: int
    ) -> "Permutation":
        """Build a permutation from 1-based cycles (successor convention).

        Args:
            cycles (Iterable[Sequence[int]]): each cycle maps a point to the next
                one listed and the last point to the first.
            degree (int): number of points.

        Returns:
            Permutation: the product of the given disjoint cycles.
        """
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= degree:
                    raise MalformedPermutationError(
                        f"point {point} out of range 1..{degree}"
                    )
                if point in seen:
                    raise MalformedPermutationError(f"point {point} repeated")
                seen.add(point)
            for index, point in enumerate(cycle):
                images[point - 1] = cycle[(index + 1) % len(cycle)] - 1
        return cls._trusted(tuple(images))

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> Tuple[int, ...]:
        """1-based image list."""
        return tuple(x + 1 for x in self._images)

    @property
    def array0(self) -> Tuple[int, ...]:
        """0-based image tuple."""
        return self._images

    def __call__(self, point: int) -> int:
        return self._images[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"cannot compose degree {self.degree} with degree {other.degree}"
            )
        mine = self._images
        return Permutation._trusted(tuple(mine[x] for x in other._images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, v in enumerate(self._images):
            inv[v] = i
        return Permutation._trusted(tuple(inv))

    def conjugate(self, by: "Permutation") -> "Permutation":
        """Return `by * self * by^-1`."""
        return by * self * by.inverse()

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self._images))

    def cycles(self, include_fixed: bool = False) -> List[Tuple[int, ...]]:
        """Disjoint cycles, each starting at its least point, ordered by it."""
        seen = [False] * self.degree
        result = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x + 1)
                x = self._images[x]
            if len(cycle) > 1 or include_fixed:
                result.append(tuple(cycle))
        return result

    def cycle_type(self) -> CycleType:
        return CycleType.from_lengths(
            len(cycle) for cycle in self.cycles(include_fixed=True)
        )

    def order(self) -> int:
        return reduce(lcm, (len(c) for c in self.cycles(include_fixed=True)), 1)

    def fixed_points(self) -> List[int]:
        return [i + 1 for i, v in enumerate(self._images) if i == v]

    def power(self, exponent: int) -> "Permutation":
        result = Permutation.identity(self.degree)
        base = self if exponent >= 0 else self.inverse()
        for _ in range(abs(exponent)):
            result = base * result
        return result

    def to_cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other: "Permutation") -> bool:
        return self._images < other._images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse an image list "[i1,...,in]" or cycle notation "(a b c)(d e)".

    Args:
        text (str): permutation text with 1-based points.
        degree (int): number of points n.

    Returns:
        Permutation: the parsed permutation.
    """
    assert degree > 0, "degree must be larger than 0!"
    body = text.strip()
    if body.startswith("["):
        if not body.endswith("]"):
            raise MalformedPermutationError(f"unterminated image list {text!r}")
        try:
            images = [int(x) for x in re.split(r"[,\s]+", body[1:-1].strip()) if x]
        except ValueError:
            raise MalformedPermutationError(f"non-integer image in {text!r}")
        if len(images) != degree:
            raise MalformedPermutationError(
                f"expected {degree} images, got {len(images)} in {text!r}"
            )
        return Permutation(images)
    if _CYCLE.sub("", body).strip():
        raise MalformedPermutationError(f"cannot parse {text!r}")
    cycles = []
    for match in _CYCLE.finditer(body):
        try:
            cycle = [int(x) for x in re.split(r"[,\s]+", match.group(1).strip()) if x]
        except ValueError:
            raise MalformedPermutationError(f"non-integer point in {text!r}")
        if cycle:
            cycles.append(cycle)
    return Permutation.from_cycles(cycles, degree)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """x -> p(q(x))."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def cycle_type(p: Permutation) -> CycleType:
    return p.cycle_type()


def order_of(p: Permutation) -> int:
    return p.order()
