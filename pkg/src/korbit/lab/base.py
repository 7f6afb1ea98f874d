import itertools
import logging
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..closure import aut_of_coloring, orbitals, two_closure
from ..config import LabConfig
from ..group import PermutationGroup, is_primitive
from .result import CheckStatus, Params, Witness, normalize

logger = logging.getLogger(__name__)

Facts = Dict[str, Any]


@dataclass(frozen=True)
class Evaluation:
    """Truth value of a predicate on one instance with the facts behind it.

    `holds` is None when the predicate could not be decided.
    """

    holds: Optional[bool]
    facts: Facts = field(default_factory=dict)


class BaseCheck(metaclass=ABCMeta):
    """A numbered statement turned into an executable check.

    Subclasses enumerate the instances a group offers, decide the hypothesis
    on each and evaluate the conclusion where the hypothesis holds.
    """

    check_id: str = ""
    anchor: str = ""
    control: bool = False

    @abstractmethod
    def instances(self, G: PermutationGroup, config: LabConfig) -> Iterator[Params]:
        raise NotImplementedError("instances must be implemented.")

    @abstractmethod
    def hypothesis(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        raise NotImplementedError("hypothesis must be implemented.")

    @abstractmethod
    def conclusion(
        self, G: PermutationGroup, params: Params, config: LabConfig
    ) -> Evaluation:
        raise NotImplementedError("conclusion must be implemented.")

    def verify_facts(
        self,
        G: PermutationGroup,
        params: Params,
        witness: Witness,
        status: CheckStatus,
        config: LabConfig,
    ) -> bool:
        """Recompute both predicates and compare them with the witness and status."""
        hypothesis = self.hypothesis(G, params, config)
        if not hypothesis.holds:
            return False
        if normalize(hypothesis.facts) != witness.get("hypothesis"):
            return False
        conclusion = self.conclusion(G, params, config)
        if normalize(conclusion.facts) != witness.get("conclusion"):
            return False
        return conclusion_status(conclusion) is status

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.check_id})"


def lab_is_2_closed(G: PermutationGroup, config: LabConfig) -> Tuple[bool, int]:
    """2-closedness and the order of the 2-closure.

    The disk memo is only consulted when the config names a cache directory.
    """
    caps = config.caps
    if config.cache_dir is not None:
        closure = two_closure(G, caps.engine_cap, caps.element_cap, config.cache_dir)
    else:
        closure = aut_of_coloring(orbitals(G), caps.engine_cap, caps.element_cap)
    return closure.order == G.order, closure.order


def is_lab_primitive(G: PermutationGroup, config: LabConfig) -> bool:
    """Primitive, and also non-Abelian unless the convention is "standard"."""
    if not is_primitive(G):
        return False
    return config.abelian_primitive_convention == "standard" or not G.is_abelian()


def subset_orbit_reps(G: PermutationGroup, k: int) -> List[Tuple[int, ...]]:
    """Least member of every G-orbit on k-subsets, in lexicographic order."""
    seen: set = set()
    reps = []
    for subset in itertools.combinations(range(1, G.degree + 1), k):
        if subset in seen:
            continue
        reps.append(subset)
        seen.update(subset_orbit(G, subset))
    return reps


def subset_orbit(G: PermutationGroup, subset: Sequence[int]) -> List[Tuple[int, ...]]:
    images = np.sort(G.element_array[:, np.array(subset) - 1] + 1, axis=1)
    return [tuple(r) for r in np.unique(images, axis=0).tolist()]


def capped(items: Iterator[Params], config: LabConfig) -> Iterator[Params]:
    return itertools.islice(items, config.caps.instance_cap)


def conclusion_status(conclusion: Evaluation) -> CheckStatus:
    if conclusion.holds is None:
        return CheckStatus.UNKNOWN
    return CheckStatus.PASS if conclusion.holds else CheckStatus.FAIL
