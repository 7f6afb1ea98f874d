import itertools
import logging
import re
from collections import Counter
from dataclasses import dataclass
from math import perm
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple, Union

import numpy as np
from tqdm import tqdm

from ..config import DEFAULT_CAPS
from ..exceptions import PreconditionError, TooManyTuplesError
from ..group import PermutationGroup
from ..group.group import KTuple
from .actions import check_tuple

logger = logging.getLogger(__name__)

_HEADER = re.compile(r"^k=(\d+) n=(\d+) size=(\d+)$")
_TUPLE = re.compile(r"^\((\d+(?:,\d+)*)\)$")


class KOrbit:
    """A set of non-diagonal k-tuples on 1..n, stored in sorted order.

    Equality is set equality. Produced by `k_orbit` it is an orbit of the
    group's coordinate-wise action, but any tuple set can be wrapped.
    """

    __slots__ = ("k", "degree", "tuples")

    def __init__(self, tuples: Iterable[KTuple], degree: int) -> None:
        ordered = sorted({check_tuple(t, degree) for t in tuples})
        if not ordered:
            raise PreconditionError("a k-orbit needs at least one tuple")
        arities = {len(t) for t in ordered}
        if len(arities) != 1:
            raise PreconditionError(f"mixed arities {sorted(arities)}")
        self.k: int = arities.pop()
        self.degree = degree
        self.tuples: Tuple[KTuple, ...] = tuple(ordered)

    def __iter__(self) -> Iterator[KTuple]:
        return iter(self.tuples)

    def __len__(self) -> int:
        return len(self.tuples)

    def __contains__(self, item: object) -> bool:
        return item in self.tuple_set

    @property
    def tuple_set(self) -> FrozenSet[KTuple]:
        return frozenset(self.tuples)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KOrbit):
            return NotImplemented
        return self.degree == other.degree and self.tuples == other.tuples

    def __hash__(self) -> int:
        return hash((self.degree, self.tuples))

    def __repr__(self) -> str:
        head = ", ".join(map(str, self.tuples[:4]))
        tail = ", ..." if len(self) > 4 else ""
        return f"KOrbit(k={self.k}, n={self.degree}, {{{head}{tail}}})"

    @property
    def ground(self) -> FrozenSet[int]:
        """Union of the coordinate sets."""
        return frozenset(itertools.chain.from_iterable(self.tuples))

    def coordinate_family(self) -> "CoordinateFamily":
        return CoordinateFamily.of(self.tuples)

    def array0(self) -> np.ndarray:
        return np.array(self.tuples, dtype=np.int64) - 1

    def to_text(self) -> str:
        lines = [f"k={self.k} n={self.degree} size={len(self)}"]
        lines += ["(" + ",".join(map(str, t)) + ")" for t in self.tuples]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "KOrbit":
        """Parse the ".korb" format written by `to_text`."""
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        match = _HEADER.match(lines[0]) if lines else None
        if match is None:
            raise PreconditionError("missing 'k=<k> n=<n> size=<m>' header")
        k, n, size = (int(v) for v in match.groups())
        tuples = []
        for line in lines[1:]:
            body = _TUPLE.match(line.replace(" ", ""))
            if body is None:
                raise PreconditionError(f"cannot parse tuple {line!r}")
            tuples.append(tuple(int(v) for v in body.group(1).split(",")))
        orbit = cls(tuples, n)
        if orbit.k != k or len(orbit) != size:
            raise PreconditionError(
                f"header says k={k} size={size}, body has k={orbit.k} size={len(orbit)}"
            )
        return orbit


def write_korb(orbit: KOrbit, path: Union[str, Path]) -> None:
    Path(path).write_text(orbit.to_text(), encoding="utf-8")


def read_korb(path: Union[str, Path]) -> KOrbit:
    return KOrbit.from_text(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class CoordinateFamily:
    """Distinct coordinate sets of a tuple set with their multiplicities."""

    members: Tuple[Tuple[FrozenSet[int], int], ...]

    @classmethod
    def of(cls, tuples: Iterable[KTuple]) -> "CoordinateFamily":
        counts = Counter(frozenset(t) for t in tuples)
        return cls(tuple(sorted(counts.items(), key=lambda kv: sorted(kv[0]))))

    def sets(self) -> List[FrozenSet[int]]:
        return [c for c, _ in self.members]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class KBlock:
    """Maximal subset of a tuple set sharing one coordinate set."""

    coordinates: FrozenSet[int]
    tuples: Tuple[KTuple, ...]


def k_orbit(G: PermutationGroup, seed: KTuple) -> KOrbit:
    """{g.seed : g in G}."""
    seed = check_tuple(seed, G.degree)
    images = G.element_array[:, np.array(seed, dtype=np.int64) - 1] + 1
    rows = np.unique(images, axis=0)
    return KOrbit((tuple(r) for r in rows.tolist()), G.degree)


def tuple_count(n: int, k: int) -> int:
    """|V^(k)| = n! / (n-k)!."""
    return perm(n, k)


def orb_k(
    G: PermutationGroup,
    k: int,
    tuple_cap: int = DEFAULT_CAPS.tuple_cap,
    progress: bool = False,
) -> List[KOrbit]:
    """All k-orbits of G, ordered by least tuple.

    Raises:
        TooManyTuplesError: n!/(n-k)! exceeds `tuple_cap`.
    """
    if not 1 <= k <= G.degree:
        raise PreconditionError(f"k={k} outside 1..{G.degree}")
    total = tuple_count(G.degree, k)
    if total > tuple_cap:
        raise TooManyTuplesError(f"{total} {k}-tuples exceed the cap of {tuple_cap}")
    seen: set = set()
    result = []
    seeds = itertools.permutations(range(1, G.degree + 1), k)
    for seed in tqdm(seeds, total=total, disable=not progress, desc=f"orb_{k}"):
        if seed in seen:
            continue
        orbit = k_orbit(G, seed)
        seen.update(orbit.tuples)
        result.append(orbit)
    logger.debug("orb_%d of a degree %d group: %d orbits", k, G.degree, len(result))
    return result


def k_blocks(X: Iterable[KTuple]) -> List[KBlock]:
    """Group tuples by coordinate set; blocks ordered by their least tuple."""
    groups: Dict[FrozenSet[int], List[KTuple]] = {}
    for t in sorted(X):
        groups.setdefault(frozenset(t), []).append(t)
    return [KBlock(co, tuple(ts)) for co, ts in groups.items()]
