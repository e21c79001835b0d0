import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathramsey.config import Config
from pathramsey.graph import Graph, cycle_graph, path_graph, serialize_graph, star_graph
from pathramsey.lab import (
    GenSpec,
    GenSpecError,
    OracleBudgetError,
    brute_force_forcing,
    generate,
    greedy_independent_set,
    greedy_separator,
    paths_of_order,
    probe_regular,
)
from pathramsey.pipeline import ColoringFailure, color_two
from pathramsey.verify import SAFE, verify_coloring

from helpers import graphs, to_nx


def test_generate_examples():
    assert generate("path:N=7").edges == path_graph(7).edges
    g = generate(GenSpec("regular", N=10, d=3, seed=1))
    assert set(g.degrees) == {3}
    with pytest.raises(GenSpecError):
        generate("gnm:N=4,M=7")


@pytest.mark.parametrize(
    "spec", ["gnm:N=30,M=60,seed=4", "regular:N=20,d=4,seed=2", "tree:N=50,seed=9", "grid:N=3,M=5", "clique:N=6"]
)
def test_generate_is_deterministic(spec):
    assert serialize_graph(generate(spec)) == serialize_graph(generate(spec))


def test_generate_shapes():
    assert generate("grid:N=3,M=4").n_edges == 3 * 3 + 2 * 4
    t = generate("tree:N=40,seed=3")
    assert nx.is_tree(to_nx(t))
    assert generate("gnm:N=12,M=66").n_edges == 66
    assert generate("fixture:name=petersen").n_edges == 15


@pytest.mark.parametrize(
    "text", ["regular:N=5,d=3", "blob:N=3", "gnm:N=x", "gnm:N=3,Q=1", "fixture:name=nope", "regular:N=4,d=4"]
)
def test_bad_specs(text):
    with pytest.raises(GenSpecError):
        generate(text)


@given(st.integers(2, 30), st.data())
def test_gnm_matches_request(n, data):
    m = data.draw(st.integers(0, n * (n - 1) // 2))
    g = generate(GenSpec("gnm", N=n, M=m, seed=data.draw(st.integers(0, 99))))
    assert g.n_edges == m and g.n_vertices == n


@given(st.integers(3, 6), st.integers(8, 30), st.integers(0, 10**6))
def test_regular_degrees(d, n, seed):
    if (d * n) % 2:
        return
    assert set(generate(GenSpec("regular", N=n, d=d, seed=seed)).degrees) == {d}


# oracle


def test_oracle_examples():
    assert brute_force_forcing(cycle_graph(5), 3, 2).forcing
    res = brute_force_forcing(path_graph(3), 3, 2)
    assert not res.forcing and set(res.witness.colors) == {1, 2}
    assert brute_force_forcing(star_graph(3), 3, 2).forcing


def test_oracle_budget():
    with pytest.raises(OracleBudgetError):
        brute_force_forcing(generate("gnm:N=10,M=21,seed=1"), 4, 2)


def test_oracle_three_colors():
    # K_{1,3} has no monochromatic P3 once every edge has its own color
    assert not brute_force_forcing(star_graph(3), 3, 3).forcing
    assert brute_force_forcing(star_graph(4), 3, 3).forcing


@given(graphs(max_n=8), st.integers(2, 6))
def test_paths_of_order_counts(g, n):
    h = to_nx(g)
    expected = set()
    for a, b in itertools.combinations(range(g.n_vertices), 2):
        for p in nx.all_simple_paths(h, a, b, cutoff=n - 1):
            if len(p) == n:
                expected.add(frozenset(g.index_of(u, v) for u, v in zip(p, p[1:])))
    got = paths_of_order(g, n)
    assert len(got) == len(set(map(frozenset, got)))
    assert set(map(frozenset, got)) == expected


small = graphs(max_n=8).filter(lambda g: g.n_edges <= 12)


@given(small, st.integers(2, 6))
def test_oracle_witness_verifies(g, n):
    res = brute_force_forcing(g, n, 2)
    if not res.forcing:
        assert res.witness.colors[0] == 1 if g.n_edges else True
        assert verify_coloring(g, res.witness, n, mode="exact").verdict == SAFE


@given(small, st.integers(3, 6))
def test_oracle_agrees_with_color_two(g, n):
    try:
        color_two(g, n, Config(restarts=50))
    except ColoringFailure:
        return
    assert not brute_force_forcing(g, n, 2).forcing


@given(small, st.integers(2, 5), st.data())
def test_oracle_monotone_under_supergraphs(g, n, data):
    if not brute_force_forcing(g, n, 2).forcing:
        return
    missing = [e for e in itertools.combinations(range(g.n_vertices), 2) if not g.has_edge(*e)]
    extra = data.draw(st.lists(st.sampled_from(missing), unique=True, max_size=3)) if missing else []
    bigger = Graph(g.n_vertices, g.edges + tuple(extra))
    if bigger.n_edges <= 20:
        assert brute_force_forcing(bigger, n, 2).forcing


# greedy helpers and probe


@given(graphs(max_n=14))
def test_greedy_independent_set(g):
    s = set(greedy_independent_set(g))
    assert not any(u in s and v in s for u, v in g.edges)
    assert all(v in s or any(w in s for w in g.adj[v]) for v in range(g.n_vertices))


def test_greedy_separator():
    star_pair = Graph(9, ((0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (4, 6), (4, 7), (4, 8)))
    sep = greedy_separator(star_pair, 6)
    assert sep is not None and len(sep) <= 2
    assert greedy_separator(path_graph(40), 6) is None


def test_probe_empty():
    assert probe_regular(3, 6, 0).to_csv() == "d,N,sample,seed,n_min,ratio,strategy,reverified\n"


def test_probe_small_reverifies():
    table = probe_regular(3, 6, 2, Config(restarts=100), factors=(2, 3))
    assert len(table.rows) == 4
    assert all(row.reverified == SAFE for row in table.rows if row.n_min is not None)
    with pytest.raises(Exception):
        probe_regular(2, 6, 1)
