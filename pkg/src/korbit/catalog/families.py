from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from sympy import isprime, primitive_root

from ..group import Permutation, PermutationGroup, close_group

FAMILIES = (
    "cyclic",
    "symmetric",
    "alternating",
    "dihedral",
    "affine",
    "wreath",
    "regular",
)


@dataclass(frozen=True)
class FamilyMember:
    """A named group given by generators; `family` orders id precedence."""

    name: str
    degree: int
    generators: Tuple[Permutation, ...]
    family: str

    @property
    def id(self) -> str:
        return f"{self.name}@{self.degree}"


def _cycle(points: Sequence[int], degree: int) -> Permutation:
    return Permutation.from_cycles([tuple(points)], degree)


def cyclic_generators(n: int) -> List[Permutation]:
    return [_cycle(range(1, n + 1), n)]


def symmetric_generators(n: int) -> List[Permutation]:
    return [_cycle((1, 2), n), *cyclic_generators(n)]


def alternating_generators(n: int) -> List[Permutation]:
    return [_cycle((1, 2, i), n) for i in range(3, n + 1)]


def dihedral_generators(n: int) -> List[Permutation]:
    """Rotation and the reflection fixing 1, on the vertices of an n-gon."""
    reflection = Permutation([1] + [n + 2 - i for i in range(2, n + 1)])
    return [*cyclic_generators(n), reflection]


def affine_generators(p: int) -> List[Permutation]:
    """x -> x + 1 and x -> a x (a a primitive root) on Z_p, point x as x + 1."""
    assert isprime(p), "p must be prime!"
    a = int(primitive_root(p))
    translation = Permutation([(x + 1) % p + 1 for x in range(p)])
    scaling = Permutation([(a * x) % p + 1 for x in range(p)])
    return [translation, scaling]


def wreath_generators(a: int, b: int) -> List[Permutation]:
    """C_a wr C_b on b blocks of size a; block j holds points j*a+1..j*a+a."""
    n = a * b
    inner = _cycle(range(1, a + 1), n)
    outer = Permutation([(x + a) % n + 1 for x in range(n)])
    return [inner, outer]


def _product(*orders: int) -> List[Permutation]:
    """Direct product of cyclic groups on consecutive disjoint point ranges."""
    n = sum(orders)
    gens, start = [], 1
    for m in orders:
        gens.append(_cycle(range(start, start + m), n))
        start += m
    return gens


# faithful models of every group of order 2..12, keyed by order
REGULAR_MODELS: Dict[int, List[Tuple[str, Callable[[], List[Permutation]]]]] = {
    2: [("C2", lambda: cyclic_generators(2))],
    3: [("C3", lambda: cyclic_generators(3))],
    4: [("C4", lambda: cyclic_generators(4)), ("V4", lambda: _product(2, 2))],
    5: [("C5", lambda: cyclic_generators(5))],
    6: [("C6", lambda: cyclic_generators(6)), ("S3", lambda: symmetric_generators(3))],
    7: [("C7", lambda: cyclic_generators(7))],
    8: [
        ("C8", lambda: cyclic_generators(8)),
        ("C4xC2", lambda: _product(4, 2)),
        ("C2xC2xC2", lambda: _product(2, 2, 2)),
        ("D4", lambda: dihedral_generators(4)),
        (
            "Q8",
            lambda: [
                Permutation.from_cycles([(1, 2, 3, 4), (5, 6, 7, 8)], 8),
                Permutation.from_cycles([(1, 5, 3, 7), (2, 8, 4, 6)], 8),
            ],
        ),
    ],
    9: [("C9", lambda: cyclic_generators(9)), ("C3xC3", lambda: _product(3, 3))],
    10: [
        ("C10", lambda: cyclic_generators(10)),
        ("D5", lambda: dihedral_generators(5)),
    ],
    11: [("C11", lambda: cyclic_generators(11))],
    12: [
        ("C12", lambda: cyclic_generators(12)),
        ("C6xC2", lambda: _product(6, 2)),
        ("D6", lambda: dihedral_generators(6)),
        ("A4", lambda: alternating_generators(4)),
        (
            "Dic12",
            lambda: [
                Permutation.from_cycles([(1, 2, 3)], 7),
                Permutation.from_cycles([(2, 3), (4, 5, 6, 7)], 7),
            ],
        ),
    ],
}


def left_regular(H: PermutationGroup) -> List[Permutation]:
    """Generators of H acting on its sorted elements by left multiplication."""
    return [
        Permutation([H.index[s * h] + 1 for h in H.elements]) for s in H.generators
    ]


def family_members(
    max_degree: int = 12, families: Sequence[str] = FAMILIES
) -> Iterator[FamilyMember]:
    """Members of the requested families up to `max_degree`, in precedence order."""
    unknown = set(families) - set(FAMILIES)
    assert not unknown, f"unknown families {sorted(unknown)}!"
    wanted = [f for f in FAMILIES if f in families]
    for family in wanted:
        if family == "cyclic":
            for n in range(2, max_degree + 1):
                yield FamilyMember(f"C{n}", n, tuple(cyclic_generators(n)), family)
        elif family == "symmetric":
            for n in range(2, max_degree + 1):
                yield FamilyMember(f"S{n}", n, tuple(symmetric_generators(n)), family)
        elif family == "alternating":
            for n in range(3, max_degree + 1):
                gens = tuple(alternating_generators(n))
                yield FamilyMember(f"A{n}", n, gens, family)
        elif family == "dihedral":
            for n in range(3, max_degree + 1):
                yield FamilyMember(f"D{n}", n, tuple(dihedral_generators(n)), family)
        elif family == "affine":
            for p in range(5, max_degree + 1):
                if isprime(p):
                    gens = tuple(affine_generators(p))
                    yield FamilyMember(f"F{p * (p - 1)}", p, gens, family)
        elif family == "wreath":
            for a in range(2, max_degree // 2 + 1):
                for b in range(2, max_degree // a + 1):
                    gens = tuple(wreath_generators(a, b))
                    yield FamilyMember(f"C{a}wrC{b}", a * b, gens, family)
        else:
            for order in range(2, max_degree + 1):
                for name, model in REGULAR_MODELS[order]:
                    H = close_group(model())
                    gens = tuple(left_regular(H))
                    yield FamilyMember(f"{name}-regular", order, gens, family)
