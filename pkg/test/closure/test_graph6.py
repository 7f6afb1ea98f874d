import itertools

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from pytest import mark, raises

import korbit as kb
from korbit.exceptions import EdgeListParseError, EngineCapError, Graph6ParseError


def edge_set(digraph: kb.ColoredDigraph) -> set:
    return {frozenset(e) for e in digraph.edge_graph().edges()}


class TestGraph6:
    @mark.parametrize(
        "graph",
        [
            nx.petersen_graph(),
            nx.cycle_graph(5),
            nx.complete_graph(4),
            nx.path_graph(2),
            nx.empty_graph(3),
            nx.circulant_graph(70, [1, 5]),
        ],
    )
    def test_matches_networkx_encoder(self, graph: nx.Graph) -> None:
        data = nx.to_graph6_bytes(graph, header=False)
        parsed = kb.parse_graph6(data)
        assert parsed.degree == graph.number_of_nodes()
        assert edge_set(parsed) == {frozenset((u + 1, v + 1)) for u, v in graph.edges()}

    def test_header_and_text(self) -> None:
        data = nx.to_graph6_bytes(nx.cycle_graph(5), header=True)
        body = data[len(b">>graph6<<") :].decode()
        assert kb.parse_graph6(data) == kb.parse_graph6(body)

    @mark.parametrize(
        "data, offset",
        [(b"", 0), (b"C", 1), (b"A_!", 2), (b":Fa@x^", 0), (b"A_?", 2)],
    )
    def test_errors_carry_offsets(self, data: bytes, offset: int) -> None:
        with raises(Graph6ParseError) as error:
            kb.parse_graph6(data)
        assert error.value.offset == offset

    def test_edge_list(self) -> None:
        parsed = kb.parse_edge_list("4\n1 2\n2 3\n# closing edge\n3 4\n4 1\n")
        assert parsed == kb.import_graph(nx.to_graph6_bytes(nx.cycle_graph(4)))
        assert kb.import_graph("3\n1 2\n").degree == 3

    @mark.parametrize(
        "text, line", [("", 1), ("x\n", 1), ("3\n1 4\n", 2), ("3\n1 2\n2\n", 3)]
    )
    def test_edge_list_errors(self, text: str, line: int) -> None:
        with raises(EdgeListParseError) as error:
            kb.parse_edge_list(text)
        assert error.value.line == line


class TestAutomorphisms:
    @staticmethod
    def networkx_automorphisms(graph: nx.Graph) -> int:
        return sum(1 for _ in GraphMatcher(graph, graph).isomorphisms_iter())

    @mark.parametrize(
        "graph",
        [
            nx.petersen_graph(),
            nx.cycle_graph(6),
            nx.complete_bipartite_graph(2, 3),
            nx.star_graph(4),
            nx.path_graph(5),
        ],
    )
    def test_against_networkx(self, graph: nx.Graph) -> None:
        digraph = kb.ColoredDigraph.from_networkx(graph)
        G = kb.aut_of_coloring(digraph)
        assert G.order == self.networkx_automorphisms(graph)
        assert all(digraph.preserved_by(G.element_array[i]) for i in range(G.order))

    def test_petersen(self) -> None:
        digraph = kb.import_graph(nx.to_graph6_bytes(nx.petersen_graph(), header=False))
        G = kb.aut_of_coloring(digraph)
        assert G.order == 120
        assert G.is_transitive()
        found = kb.find_regular(G)
        assert found.witness is not None
        assert found.witness.cycle_type().as_dict() == {5: 2}
        assert not found.witness.fixed_points()

    def test_brute_force_on_small_digraph(self) -> None:
        colors = kb.orbitals(kb.close_group([kb.parse_permutation("(1 2 3)(4 5)", 5)]))
        G = kb.aut_of_coloring(colors)
        brute = [
            p
            for p in itertools.permutations(range(5))
            if colors.preserved_by(list(p))
        ]
        assert G.order == len(brute)

    def test_engine_cap(self) -> None:
        with raises(EngineCapError):
            kb.aut_of_coloring(kb.ColoredDigraph.from_networkx(nx.cycle_graph(20)))
