from .digraph import ColoredDigraph, OrbitalPartition, orbitals
from .engine import (
    AutomorphismSearch,
    BaseStructure,
    DigraphStructure,
    TupleSetStructure,
    aut_of_coloring,
    automorphisms,
)
from .graph6 import import_graph, parse_edge_list, parse_graph6
from .two_closure import closure_digest, is_2_closed, two_closure

__all__ = [
    "AutomorphismSearch",
    "BaseStructure",
    "ColoredDigraph",
    "DigraphStructure",
    "OrbitalPartition",
    "TupleSetStructure",
    "aut_of_coloring",
    "automorphisms",
    "closure_digest",
    "import_graph",
    "is_2_closed",
    "orbitals",
    "parse_edge_list",
    "parse_graph6",
    "two_closure",
]
