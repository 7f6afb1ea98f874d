import logging
from dataclasses import dataclass
from typing import Callable, Optional

from sympy import factorint

from ..exceptions import PreconditionError
from ..group import Permutation, PermutationGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegularElementReport:
    """Outcome of an exhaustive element scan.

    `searched` counts the elements inspected up to and including the witness.
    """

    group_id: Optional[str]
    found: bool
    witness: Optional[Permutation]
    witness_cycle_len: Optional[int]
    searched: int

    def witness_images(self) -> Optional[list]:
        return None if self.witness is None else list(self.witness.images)


def is_regular_element(g: Permutation) -> bool:
    """All cycles (fixed points included) have the same length."""
    return g.cycle_type().uniform


def is_prime_power(m: int) -> bool:
    return m > 1 and len(factorint(m)) == 1


def _scan(
    G: PermutationGroup,
    accept: Callable[[Permutation], bool],
    group_id: Optional[str],
) -> RegularElementReport:
    for searched, g in enumerate(G, start=1):
        if accept(g):
            return RegularElementReport(group_id, True, g, g.order(), searched)
    return RegularElementReport(group_id, False, None, None, G.order)


def find_regular(
    G: PermutationGroup,
    include_identity: bool = False,
    group_id: Optional[str] = None,
) -> RegularElementReport:
    """First element, in canonical order, whose cycles all have equal length.

    The identity only counts when `include_identity` is set.
    """
    return _scan(
        G,
        lambda g: (include_identity or not g.is_identity()) and is_regular_element(g),
        group_id,
    )


def find_fpf_prime_power(
    G: PermutationGroup, group_id: Optional[str] = None
) -> RegularElementReport:
    """First fixed-point-free element of prime-power order.

    Every transitive group has one, so a miss signals a bug rather than a
    counterexample.

    Raises:
        PreconditionError: G is intransitive.
    """
    if not G.is_transitive():
        raise PreconditionError("group must be transitive")
    report = _scan(
        G, lambda g: not g.fixed_points() and is_prime_power(g.order()), group_id
    )
    if not report.found:
        logger.error("no fixed-point-free prime-power element in %s", group_id or G)
    return report


def find_semiregular_of_order(
    G: PermutationGroup, p: int, group_id: Optional[str] = None
) -> RegularElementReport:
    """First element all of whose cycles have length p."""
    assert p > 0, "p must be larger than 0!"
    return _scan(
        G, lambda g: g.cycle_type().counts == ((p, G.degree // p),), group_id
    )
