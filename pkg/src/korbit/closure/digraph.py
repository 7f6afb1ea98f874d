from typing import Any, List, Optional

import networkx as nx
import numpy as np

from ..exceptions import PreconditionError
from ..group import PermutationGroup

EDGE_COLOR = 1
NON_EDGE_COLOR = 2


class ColoredDigraph:
    """A total coloring of V x V, stored as an n x n matrix of color indices.

    Diagonal colors never occur off the diagonal, so directed orbital
    colorings and undirected graphs go through the same search.
    """

    def __init__(self, colors: np.ndarray) -> None:
        colors = np.array(colors, dtype=np.int64)
        if colors.ndim != 2 or colors.shape[0] != colors.shape[1] or colors.size == 0:
            raise PreconditionError(
                f"color matrix of shape {colors.shape} is not square"
            )
        if colors.min() < 0:
            raise PreconditionError("colors must be non-negative")
        diagonal = set(np.diag(colors).tolist())
        off = colors[~np.eye(len(colors), dtype=bool)]
        if diagonal & set(off.tolist()):
            raise PreconditionError("diagonal colors reappear off the diagonal")
        self.colors = colors
        self.colors.setflags(write=False)

    @property
    def degree(self) -> int:
        return int(self.colors.shape[0])

    @property
    def color_count(self) -> int:
        return int(self.colors.max()) + 1

    def used_colors(self) -> List[int]:
        return [int(c) for c in np.unique(self.colors)]

    def diagonal_colors(self) -> List[int]:
        return sorted(set(np.diag(self.colors).tolist()))

    def off_diagonal_colors(self) -> List[int]:
        off = self.colors[~np.eye(self.degree, dtype=bool)]
        return [int(c) for c in np.unique(off)]

    def color(self, u: int, v: int) -> int:
        """Color of the pair (u, v), 1-based points."""
        return int(self.colors[u - 1, v - 1])

    def is_symmetric(self) -> bool:
        return bool((self.colors == self.colors.T).all())

    def preserved_by(self, images0: np.ndarray) -> bool:
        p = np.asarray(images0)
        return bool((self.colors[np.ix_(p, p)] == self.colors).all())

    def color_classes(self) -> List[frozenset]:
        """Pairs (1-based) of each used color, in color order."""
        classes = []
        for c in self.used_colors():
            us, vs = np.nonzero(self.colors == c)
            classes.append(frozenset((int(u) + 1, int(v) + 1) for u, v in zip(us, vs)))
        return classes

    def same_partition(self, other: "ColoredDigraph") -> bool:
        """Equal color partitions of V x V, regardless of color numbering."""
        return self.degree == other.degree and set(self.color_classes()) == set(
            other.color_classes()
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredDigraph):
            return NotImplemented
        return np.array_equal(self.colors, other.colors)

    def __hash__(self) -> int:
        return hash(self.colors.tobytes())

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.degree}, colors={self.used_colors()})"

    @classmethod
    def from_networkx(cls, graph: Any) -> "ColoredDigraph":
        """Graph coloring with 0 on the diagonal, 1 on edges and 2 on non-edges.

        Nodes are numbered in sorted order (insertion order if unsortable);
        undirected edges are symmetrized.
        """
        nodes = list(graph.nodes)
        try:
            nodes = sorted(nodes)
        except TypeError:
            pass
        n = len(nodes)
        if n == 0:
            raise PreconditionError("graph has no vertices")
        position = {node: i for i, node in enumerate(nodes)}
        colors = np.full((n, n), NON_EDGE_COLOR, dtype=np.int64)
        np.fill_diagonal(colors, 0)
        for u, v in graph.edges():
            if u == v:
                raise PreconditionError(f"loop at vertex {u!r}")
            colors[position[u], position[v]] = EDGE_COLOR
            if not graph.is_directed():
                colors[position[v], position[u]] = EDGE_COLOR
        return cls(colors)

    def to_networkx(self) -> nx.DiGraph:
        """Directed graph on 1..n carrying the color of every pair."""
        graph = nx.DiGraph()
        for v in range(self.degree):
            graph.add_node(v + 1, color=int(self.colors[v, v]))
        for u, v in zip(*np.nonzero(~np.eye(self.degree, dtype=bool))):
            graph.add_edge(int(u) + 1, int(v) + 1, color=int(self.colors[u, v]))
        return graph

    def edge_graph(self) -> nx.Graph:
        """Undirected graph of the edge color (for imported graphs)."""
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.degree + 1))
        us, vs = np.nonzero(self.colors == EDGE_COLOR)
        graph.add_edges_from((int(u) + 1, int(v) + 1) for u, v in zip(us, vs) if u < v)
        return graph


class OrbitalPartition(ColoredDigraph):
    """Orbits of a group on V x V, colors numbered by their least pair."""

    def __init__(self, colors: np.ndarray, group: Optional[PermutationGroup] = None):
        super().__init__(colors)
        self.group = group


def orbitals(G: PermutationGroup) -> OrbitalPartition:
    n = G.degree
    E = G.element_array
    us, vs = np.divmod(np.arange(n * n), n)
    images = E[:, us] * n + E[:, vs]
    least = images.min(axis=0)
    _, colors = np.unique(least, return_inverse=True)
    return OrbitalPartition(colors.reshape(n, n), G)
