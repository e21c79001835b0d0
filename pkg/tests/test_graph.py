import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathramsey.graph import (
    DisconnectedError,
    DuplicateEdgeError,
    Graph,
    HeaderError,
    SelfLoopError,
    VertexRangeError,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    low_degree_peel,
    parse_graph,
    path_graph,
    serialize_graph,
    spanning_forest,
    spanning_tree,
    star_graph,
)

from helpers import graphs, to_nx


def test_parse_path():
    g = parse_graph("graph 3 2\n0 1\n1 2")
    assert g.n_vertices == 3 and g.edges == ((0, 1), (1, 2))


def test_parse_isolated_vertex():
    g = parse_graph("graph 1 0")
    assert g.n_vertices == 1 and g.n_edges == 0


@pytest.mark.parametrize(
    "text, err",
    [
        ("graph 2 1\n0 0", SelfLoopError),
        ("graph 2 1\n0 2", VertexRangeError),
        ("graph 3 2\n0 1\n1 0", DuplicateEdgeError),
        ("grph 2 1\n0 1", HeaderError),
        ("graph 2 2\n0 1", HeaderError),
    ],
)
def test_parse_errors_are_distinct(text, err):
    with pytest.raises(err):
        parse_graph(text)


@given(graphs())
def test_round_trip(g):
    text = serialize_graph(g)
    assert serialize_graph(parse_graph(text)) == text
    assert parse_graph(text).edges == g.edges


def test_serialize_sorts_edges():
    assert serialize_graph(parse_graph("graph 3 2\n2 1\n1 0")) == "graph 3 2\n0 1\n1 2\n"


def test_components_examples():
    assert components(disjoint_union([path_graph(3), path_graph(2)])) == [[0, 1, 2], [3, 4]]
    assert components(complete_graph(4)) == [[0, 1, 2, 3]]
    assert components(Graph(3, ())) == [[0], [1], [2]]


@given(graphs())
def test_components_partition(g):
    comps = components(g)
    flat = sorted(v for c in comps for v in c)
    assert flat == list(range(g.n_vertices))
    where = {v: i for i, c in enumerate(comps) for v in c}
    assert all(where[u] == where[v] for u, v in g.edges)
    assert sorted(map(frozenset, comps), key=sorted) == sorted(
        map(frozenset, nx.connected_components(to_nx(g))), key=sorted
    )
    keys = [(-len(c), c[0]) for c in comps]
    assert keys == sorted(keys)


def test_bfs_depths_on_c4():
    assert spanning_tree(cycle_graph(4), 0, "bfs").depth == (0, 1, 2, 1)


def test_dfs_on_path_is_path():
    t = spanning_tree(path_graph(5), 0, "dfs")
    assert t.parent == (None, 0, 1, 2, 3)


def test_disconnected_tree_rejected():
    with pytest.raises(DisconnectedError):
        spanning_tree(disjoint_union([path_graph(2), path_graph(2)]), 0)


@given(graphs(min_n=1, connected=True))
def test_bfs_levels(g):
    t = spanning_tree(g, 0, "bfs")
    dist = nx.single_source_shortest_path_length(to_nx(g), 0)
    assert all(t.depth[v] == dist[v] for v in range(g.n_vertices))
    assert all(abs(t.depth[u] - t.depth[v]) <= 1 for u, v in g.edges)


@given(graphs(min_n=1, connected=True))
def test_dfs_edges_are_ancestral(g):
    t = spanning_tree(g, 0, "dfs")
    assert all(t.is_ancestor(u, v) or t.is_ancestor(v, u) for u, v in g.edges)
    assert sum(p is not None for p in t.parent) == g.n_vertices - 1


@given(graphs())
def test_spanning_forest_is_forest(g):
    f = g.edge_subgraph(spanning_forest(g))
    assert nx.is_forest(to_nx(f)) if g.n_vertices else True
    assert len(components(f)) == len(components(g))


def test_peel_examples():
    s, core = low_degree_peel(star_graph(5), 3)
    assert s == [1, 2, 3, 4, 5] and core.ids == (0,)
    s, core = low_degree_peel(complete_graph(5), 3)
    assert s == [] and core.n_edges == 10
    s, core = low_degree_peel(path_graph(4), 1)
    assert s == [0, 3] and core.ids == (1, 2) and core.edges == ((0, 1),)


@given(graphs(), st.integers(1, 5))
def test_peel_core_degrees(g, r):
    s, core = low_degree_peel(g, r)
    assert all(g.degree(v) > r for v in core.ids)
    assert set(s).isdisjoint(core.ids)
