import math

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathramsey.decomp import (
    covering_star_forest,
    is_star_forest,
    partition_connected,
    prune_long_paths,
    star_decompose,
    tree_partition_properties,
)
from pathramsey.graph import GraphError, Graph, complete_graph, components, cycle_graph, path_graph, star_graph
from pathramsey.verify import NotAForestError, longest_path_exact, longest_path_tree

from helpers import from_nx, graphs, to_nx


def nx_star_forest(g, idx) -> bool:
    h = nx.Graph(g.edges[i] for i in idx)
    if not h:
        return True
    return nx.is_forest(h) and all(
        sum(1 for v in comp if h.degree(v) >= 2) <= 1 for comp in nx.connected_components(h)
    )


def touched(g, idx):
    return {v for i in idx for v in g.edges[i]}


def test_covering_star_forest_examples():
    assert covering_star_forest(path_graph(3)) == [0, 1]
    matching = Graph(6, ((0, 1), (2, 3), (4, 5)))
    assert covering_star_forest(matching) == [0, 1, 2]
    p4 = covering_star_forest(path_graph(4))
    assert touched(path_graph(4), p4) == {0, 1, 2, 3} and nx_star_forest(path_graph(4), p4)


def test_covering_star_forest_needs_no_isolated_vertex():
    with pytest.raises(GraphError):
        covering_star_forest(Graph(3, ((0, 1),)))


@given(graphs(max_n=12))
def test_covering_star_forest_property(g):
    g = g.remove_vertices(v for v in range(g.n_vertices) if g.degree(v) == 0)
    idx = covering_star_forest(g)
    assert touched(g, idx) == set(range(g.n_vertices))
    assert nx_star_forest(g, idx) and is_star_forest(g, idx)


def test_star_decompose_examples():
    assert len(star_decompose(cycle_graph(4))) == 2
    assert len(star_decompose(star_graph(7))) == 1
    assert len(star_decompose(complete_graph(4))) <= 3
    assert len(star_decompose(Graph(4, ()))) == 0


@given(graphs(max_n=12))
def test_star_decompose_property(g):
    dec = star_decompose(g)
    assert len(dec) <= g.max_degree
    flat = sorted(i for cl in dec.classes for i in cl)
    assert flat == list(range(g.n_edges))
    assert all(nx_star_forest(g, cl) for cl in dec.classes)


def test_prune_examples():
    cut, rest = prune_long_paths(path_graph(6), 6)
    assert cut == [2] and [len(c) for c in components(rest)] == [3, 3]
    cut, rest = prune_long_paths(path_graph(20), 6)
    assert len(cut) <= 20 // 3 - 1 and longest_path_tree(rest) < 6
    assert prune_long_paths(star_graph(9), 4)[0] == []


def test_prune_preconditions():
    with pytest.raises(NotAForestError):
        prune_long_paths(cycle_graph(5), 3)
    with pytest.raises(GraphError):
        prune_long_paths(Graph(5, ((0, 1), (2, 3), (3, 4))), 6)


def test_odd_path_cut_keeps_larger_half_low():
    cut, rest = prune_long_paths(path_graph(7), 7)
    assert cut == [3]
    assert components(rest)[0] == [0, 1, 2, 3]


@given(st.integers(2, 60), st.integers(2, 30), st.integers(0, 2**32 - 1))
def test_prune_random_trees(size, n, seed):
    t = from_nx(nx.random_labeled_tree(size, seed=seed))
    if size < n // 2:
        return
    cut, rest = prune_long_paths(t, n)
    assert longest_path_tree(rest) < n
    assert len(cut) <= max(size // (n // 2) - 1, 0)
    if size <= 20:
        assert longest_path_exact(rest) == longest_path_tree(rest)


def test_partition_examples():
    cp = partition_connected(path_graph(9), 3)
    props = tree_partition_properties(path_graph(9), cp)
    assert props["T1"] and props["T2"] and props["connected"]
    assert all(3 < len(p) <= 7 for p in cp.parts[:-1])
    g = complete_graph(6)
    assert partition_connected(g, 5).parts == ((0, 1, 2, 3, 4, 5),)
    c16 = cycle_graph(16)
    cp = partition_connected(c16, 4)
    assert 4 / 3 <= cp.t <= 5 and all(tree_partition_properties(c16, cp).values())


def test_partition_errors():
    with pytest.raises(GraphError):
        partition_connected(path_graph(5), 5)
    with pytest.raises(GraphError):
        partition_connected(Graph(4, ((0, 1), (2, 3))), 1)


@given(graphs(min_n=2, max_n=40, connected=True), st.data())
def test_partition_properties(g, data):
    ell = data.draw(st.integers(1, g.n_vertices - 1))
    cp = partition_connected(g, ell)
    props = tree_partition_properties(g, cp)
    assert props["T1"] and props["T2"] and props["connected"]
    for part in cp.parts:
        assert nx.is_connected(to_nx(g).subgraph(part))
    sq = partition_connected(g, math.isqrt(g.n_vertices)) if math.isqrt(g.n_vertices) < g.n_vertices else None
    if sq is not None:
        assert tree_partition_properties(g, sq)["T3"]
