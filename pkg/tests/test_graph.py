import io

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from girth.generators import cycle_graph, gnp, named, path_graph
from girth.graph import (
    EdgeList,
    EdgeListParseError,
    GraphError,
    build_graph,
    component_subgraphs,
    connected_and_cyclic,
    from_edges,
    induced_subgraph,
    parse_edge_list,
    serialize,
    validate,
)


class TestParse:
    def test_triangle(self):
        e = parse_edge_list("0 1\n1 2\n2 0\n")
        assert e.n == 3
        assert e.edges == [(0, 1), (1, 2), (2, 0)]

    def test_header_and_comment(self):
        e = parse_edge_list("# triangle\np 3 3\n0 1\n1 2\n2 0\n")
        assert e.n == 3 and e.declared_n == 3
        assert e.edges == [(0, 1), (1, 2), (2, 0)]

    def test_duplicates_kept(self):
        assert parse_edge_list("0 1\n0 1\n") == EdgeList(n=2, edges=[(0, 1), (0, 1)])

    def test_declared_n_larger_than_ids(self):
        assert parse_edge_list("p 5 1\n0 1\n").n == 5

    def test_stream_input(self):
        assert parse_edge_list(io.StringIO("0 1\n")).n == 2

    @pytest.mark.parametrize("text, line", [
        ("0 1\n1 x\n", 2),
        ("0 1 2\n", 1),
        ("p 3\n", 1),
        ("-1 2\n", 1),
        ("0 1\np 3 1\n", 2),
    ])
    def test_malformed(self, text, line):
        with pytest.raises(EdgeListParseError) as exc:
            parse_edge_list(text)
        assert exc.value.line_no == line

    def test_out_of_bounds_with_header(self):
        with pytest.raises(EdgeListParseError, match="out of range"):
            parse_edge_list("p 3 1\n0 3\n")


class TestBuild:
    def test_dedupe_and_symmetry(self):
        g = build_graph(EdgeList(n=2, edges=[(0, 1), (1, 0), (0, 1)]))
        assert g.m == 1
        assert g.adjacency == [[1], [0]]

    def test_self_loop_names_vertex(self):
        with pytest.raises(GraphError, match="vertex 3"):
            build_graph(EdgeList(n=5, edges=[(0, 1), (3, 3)]))

    def test_c5(self):
        g = build_graph(parse_edge_list("".join(f"{i} {(i + 1) % 5}\n" for i in range(5))))
        assert (g.n, g.m) == (5, 5)
        assert all(len(a) == 2 for a in g.adjacency)

    def test_adjacency_sorted(self):
        g = from_edges(4, [(0, 3), (0, 1), (2, 0)])
        assert g.adjacency[0] == [1, 2, 3]

    def test_isolated_vertices_kept(self):
        g = build_graph(parse_edge_list("p 4 1\n0 1\n"))
        assert g.n == 4 and g.degree(3) == 0


edge_lists = st.integers(min_value=1, max_value=25).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                 .filter(lambda e: e[0] != e[1]), max_size=60),
    ))


@settings(max_examples=150, deadline=None)
@given(edge_lists)
def test_serialize_roundtrip(data):
    n, edges = data
    g = build_graph(EdgeList(n=n, edges=edges))
    validate(g)
    text = serialize(g)
    assert build_graph(parse_edge_list(text)) == g
    assert serialize(build_graph(parse_edge_list(text))) == text
    assert g.m == len({(min(e), max(e)) for e in edges})


def test_serialize_format():
    assert serialize(cycle_graph(3)) == "p 3 3\n0 1\n0 2\n1 2\n"


def test_validate_rejects_asymmetric():
    from girth.graph import Graph
    bad = Graph(np.array([0, 1, 1]), np.array([1]))
    with pytest.raises(GraphError):
        validate(bad)


class TestConnectedAndCyclic:
    def test_path(self):
        assert connected_and_cyclic(path_graph(4)) == (True, False)

    def test_two_triangles(self):
        g = from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert connected_and_cyclic(g) == (False, True)

    def test_petersen(self, petersen):
        assert connected_and_cyclic(petersen) == (True, True)

    def test_forest_plus_cycle(self):
        g = from_edges(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (6, 4)])
        assert connected_and_cyclic(g) == (False, True)

    def test_empty(self):
        assert connected_and_cyclic(from_edges(0, [])) == (True, False)


def test_component_subgraphs_partition():
    g = gnp(80, 0.03, 4)
    parts = component_subgraphs(g)
    seen = np.concatenate([ids for ids, _ in parts])
    assert sorted(seen.tolist()) == list(range(80))
    assert sum(sub.m for _, sub in parts) == g.m
    for ids, sub in parts:
        validate(sub)
        for u, v in sub.edges():
            assert g.has_edge(int(ids[u]), int(ids[v]))


def test_induced_subgraph_drops_outside_edges():
    sub = induced_subgraph(named("k4"), np.array([0, 2, 3]))
    assert sub.adjacency == [[1, 2], [0, 2], [0, 1]]
