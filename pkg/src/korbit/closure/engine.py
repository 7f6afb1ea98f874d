import logging
from abc import ABC, abstractmethod
from typing import List, Tuple

import numpy as np

from ..config import DEFAULT_CAPS
from ..exceptions import EngineCapError, GroupTooLargeError
from ..group import PermutationGroup
from .digraph import ColoredDigraph

logger = logging.getLogger(__name__)

Trace = Tuple[bytes, ...]


def _ranks(rows: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    unique, inverse = np.unique(rows, axis=0, return_inverse=True)
    return unique, inverse.reshape(-1)


class BaseStructure(ABC):
    """A finite structure on points 0..m-1 searched for automorphisms.

    Subclasses describe how a vertex sees the current cell labelling; the
    search only relies on that description being label-equivariant.
    """

    @property
    @abstractmethod
    def size(self) -> int:
        raise NotImplementedError("size must be implemented.")

    @abstractmethod
    def initial_labels(self) -> np.ndarray:
        raise NotImplementedError("initial_labels must be implemented.")

    @abstractmethod
    def signatures(self, labels: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Per-vertex signature rows and a descriptor of their columns."""
        raise NotImplementedError("signatures must be implemented.")

    @abstractmethod
    def is_automorphism(self, images0: np.ndarray) -> bool:
        raise NotImplementedError("is_automorphism must be implemented.")

    def refine(self, labels: np.ndarray) -> Tuple[np.ndarray, Trace]:
        """Iterate signature refinement to a fixpoint.

        Labels are ranks of sorted signatures, so equal traces on two sides
        mean the labels carry the same meaning.
        """
        trace: List[bytes] = []
        count = len(np.unique(labels))
        while True:
            sig, descriptor = self.signatures(labels)
            unique, labels = _ranks(np.column_stack([labels, sig]))
            sizes = np.bincount(labels)
            trace += [unique.tobytes(), sizes.tobytes(), descriptor.tobytes()]
            if len(unique) == count:
                return labels, tuple(trace)
            count = len(unique)


class DigraphStructure(BaseStructure):
    def __init__(self, digraph: ColoredDigraph) -> None:
        self.colors = digraph.colors
        self.color_count = digraph.color_count

    @property
    def size(self) -> int:
        return int(self.colors.shape[0])

    def initial_labels(self) -> np.ndarray:
        return _ranks(np.diag(self.colors)[:, None])[1]

    def signatures(self, labels: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        n, cells = self.size, int(labels.max()) + 1
        rows = np.broadcast_to(np.arange(n)[:, None], (n, n))
        out = np.zeros((n, self.color_count * cells), dtype=np.int64)
        into = np.zeros_like(out)
        np.add.at(out, (rows, self.colors * cells + labels[None, :]), 1)
        np.add.at(into, (rows, self.colors.T * cells + labels[None, :]), 1)
        return np.hstack([out, into]), np.array([cells], dtype=np.int64)

    def is_automorphism(self, images0: np.ndarray) -> bool:
        p = images0
        return bool((self.colors[np.ix_(p, p)] == self.colors).all())


class TupleSetStructure(BaseStructure):
    """A set of k-tuples over points 0..m-1 under the coordinate-wise action."""

    def __init__(self, tuples: np.ndarray, size: int) -> None:
        self.tuples = np.unique(np.asarray(tuples, dtype=np.int64), axis=0)
        self._size = size

    @property
    def size(self) -> int:
        return self._size

    def initial_labels(self) -> np.ndarray:
        return np.zeros(self._size, dtype=np.int64)

    def signatures(self, labels: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        T = self.tuples
        t, k = T.shape
        # one occurrence per (tuple, position): position plus labelled tuple
        positions = np.repeat(np.arange(k), t)[:, None]
        occurrences = np.hstack([positions, np.tile(labels[T], (k, 1))])
        vertices = T.T.reshape(-1)
        kinds, kind_of = _ranks(occurrences)
        counts = np.zeros((self._size, len(kinds)), dtype=np.int64)
        np.add.at(counts, (vertices, kind_of), 1)
        return counts, kinds

    def is_automorphism(self, images0: np.ndarray) -> bool:
        image = np.unique(images0[self.tuples], axis=0)
        return np.array_equal(image, self.tuples)


class AutomorphismSearch:
    """Individualization-refinement enumeration of all automorphisms.

    The domain side follows one fixed path, individualizing the least vertex
    of the smallest non-singleton cell; the image side tries every vertex of
    the matching cell and is pruned whenever its refinement trace differs.
    Every leaf is checked against the structure before it is kept.
    """

    def __init__(
        self,
        structure: BaseStructure,
        element_cap: int = DEFAULT_CAPS.element_cap,
    ) -> None:
        assert element_cap > 0, "element_cap must be larger than 0!"
        self.structure = structure
        self.element_cap = element_cap
        self.nodes = 0
        self.domain_leaf = np.empty(0, dtype=np.int64)

    @staticmethod
    def _individualize(labels: np.ndarray, vertex: int) -> np.ndarray:
        fresh = labels.copy()
        fresh[vertex] = labels.max() + 1
        return fresh

    def _domain_path(
        self, labels: np.ndarray
    ) -> Tuple[List[Tuple[int, Trace]], np.ndarray]:
        path = []
        while True:
            counts = np.bincount(labels)
            open_cells = np.flatnonzero(counts > 1)
            if open_cells.size == 0:
                return path, labels
            cell = int(open_cells[np.argmin(counts[open_cells])])
            vertex = int(np.flatnonzero(labels == cell)[0])
            labels, trace = self.structure.refine(self._individualize(labels, vertex))
            path.append((cell, trace))

    def run(self) -> np.ndarray:
        """All automorphisms as 0-based image rows."""
        labels, _ = self.structure.refine(self.structure.initial_labels())
        path, self.domain_leaf = self._domain_path(labels)
        found: List[np.ndarray] = []
        self._search(path, 0, labels, found)
        logger.debug(
            "automorphism search: %d nodes, %d automorphisms", self.nodes, len(found)
        )
        return np.array(found, dtype=np.int64).reshape(-1, self.structure.size)

    def _search(
        self,
        path: List[Tuple[int, Trace]],
        level: int,
        labels: np.ndarray,
        found: List[np.ndarray],
    ) -> None:
        self.nodes += 1
        if level == len(path):
            images0 = np.argsort(labels)[self.domain_leaf]
            if self.structure.is_automorphism(images0):
                found.append(images0)
                if len(found) > self.element_cap:
                    raise GroupTooLargeError(
                        f"automorphism group exceeds {self.element_cap} elements",
                        partial_count=len(found),
                    )
            return
        cell, domain_trace = path[level]
        for w in np.flatnonzero(labels == cell):
            child, trace = self.structure.refine(self._individualize(labels, int(w)))
            if trace == domain_trace:
                self._search(path, level + 1, child, found)


def automorphisms(
    structure: BaseStructure,
    engine_cap: int = DEFAULT_CAPS.engine_cap,
    element_cap: int = DEFAULT_CAPS.element_cap,
) -> PermutationGroup:
    if structure.size > engine_cap:
        raise EngineCapError(
            f"{structure.size} points exceed the engine cap of {engine_cap}"
        )
    rows = AutomorphismSearch(structure, element_cap).run()
    return PermutationGroup.from_array(rows, structure.size)


def aut_of_coloring(
    C: ColoredDigraph,
    engine_cap: int = DEFAULT_CAPS.engine_cap,
    element_cap: int = DEFAULT_CAPS.element_cap,
) -> PermutationGroup:
    """All permutations of V preserving every color of C.

    Raises:
        EngineCapError: C has more points than `engine_cap`.
        GroupTooLargeError: more than `element_cap` automorphisms.
    """
    return automorphisms(DigraphStructure(C), engine_cap, element_cap)
