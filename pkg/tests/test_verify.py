import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathramsey.coloring import BLUE, RED, Certificate, CertificateError, ColoringError, EdgeColoring, cover
from pathramsey.colorings import color_few_vertices
from pathramsey.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from pathramsey.verify import (
    COMPONENT,
    EXACT,
    HEURISTIC,
    INCONCLUSIVE,
    REFUTED,
    SAFE,
    ExactLimitError,
    NotAForestError,
    check_certificate,
    check_witness,
    longest_path_exact,
    longest_path_exact_witness,
    longest_path_tree,
    structural_bound,
    class_adjacency,
    class_components,
    verify_coloring,
)

from helpers import class_longest, dfs_longest_path, from_nx, graphs, to_nx


def mono(g, color=1, r=2, n=None):
    return EdgeColoring(tuple([color] * g.n_edges), r, n or g.n_vertices)


def test_exact_examples(petersen):
    assert longest_path_exact(path_graph(5)) == 5
    assert longest_path_exact(complete_graph(4)) == 4
    assert longest_path_exact(petersen) == 10


def test_exact_limit_enforced():
    with pytest.raises(ExactLimitError):
        longest_path_exact(path_graph(25), limit=20)


@given(graphs(max_n=9))
def test_exact_matches_enumeration(g):
    assert longest_path_exact(g) == dfs_longest_path(g.n_vertices, g.edges)


@given(graphs(min_n=1, max_n=9))
def test_exact_witness_is_a_path(g):
    size, path = longest_path_exact_witness(g)
    assert len(path) == size == len(set(path))
    assert all(g.has_edge(u, v) for u, v in zip(path, path[1:]))


def test_tree_examples():
    assert longest_path_tree(path_graph(7)) == 7
    assert longest_path_tree(star_graph(6)) == 3
    spider = Graph(10, ((0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6), (0, 7), (7, 8), (8, 9)))
    assert longest_path_tree(spider) == 7


def test_tree_rejects_cycles():
    with pytest.raises(NotAForestError):
        longest_path_tree(cycle_graph(4))


@given(st.integers(1, 20), st.integers(0, 2**32 - 1), st.integers(0, 19))
def test_tree_matches_exact_on_forests(n, seed, drop):
    t = from_nx(nx.random_labeled_tree(n, seed=seed)) if n > 1 else Graph(1, ())
    f = t.edge_subgraph(i for i in range(t.n_edges) if i != drop)
    assert longest_path_tree(f) == longest_path_exact(f)


def test_k7_few_vertices_safe():
    g = complete_graph(7)
    c = color_few_vertices(g, 6)
    rep = verify_coloring(g, c, 6, mode="exact")
    assert rep.verdict == SAFE
    assert [e.bound for e in rep.entries] == [5, 5]
    assert all(e.kind == EXACT for e in rep.entries)


def test_n_one_is_refuted():
    g = path_graph(3)
    assert verify_coloring(g, mono(g), 1).verdict == REFUTED


def test_c6_monochromatic_refuted():
    g = cycle_graph(6)
    rep = verify_coloring(g, mono(g), 6)
    assert rep.verdict == REFUTED and len(rep.witness) >= 6
    assert check_witness(g, mono(g), rep.witness, 6)


def test_bad_colorings_rejected():
    g = path_graph(3)
    with pytest.raises(ColoringError):
        verify_coloring(g, EdgeColoring((1,), 2, 3))
    with pytest.raises(ColoringError):
        verify_coloring(g, EdgeColoring((0, 1), 2, 3))
    with pytest.raises(ColoringError):
        verify_coloring(g, EdgeColoring((1, 3), 2, 3))


def test_structural_without_evidence_is_inconclusive():
    g = path_graph(30)
    rep = verify_coloring(g, mono(g), 40, mode="structural")
    assert rep.verdict in (SAFE, INCONCLUSIVE)
    big = complete_graph(25)
    rep = verify_coloring(big, mono(big), 30, mode="structural", restarts=10)
    assert rep.verdict == SAFE and rep.entries[0].kind == COMPONENT
    rep = verify_coloring(big, mono(big), 25, mode="structural", restarts=10)
    assert rep.verdict in (REFUTED, INCONCLUSIVE)
    assert rep.verdict != SAFE


def colorings_of(g):
    return st.lists(st.integers(1, 2), min_size=g.n_edges, max_size=g.n_edges).map(tuple)


@given(st.data(), graphs(max_n=9), st.integers(2, 10))
def test_verdicts_agree_with_enumeration(data, g, n):
    colors = data.draw(colorings_of(g))
    c = EdgeColoring(colors, 2, n)
    truth = max((class_longest(g, colors, col) for col in (1, 2)), default=0)
    rep = verify_coloring(g, c, n, mode="exact")
    assert rep.verdict == (SAFE if truth < n else REFUTED)
    if rep.verdict == REFUTED:
        assert check_witness(g, c, rep.witness, n)
    auto = verify_coloring(g, c, n)
    assert auto.verdict == rep.verdict or auto.verdict == INCONCLUSIVE


@given(st.data(), graphs(max_n=9), st.integers(2, 9))
def test_safe_is_monotone_in_n(data, g, n):
    c = EdgeColoring(data.draw(colorings_of(g)), 2, n)
    if verify_coloring(g, c, n).safe:
        assert verify_coloring(g, c, n + 1).safe
        assert verify_coloring(g, c, n + 3).safe


@given(st.data(), graphs(min_n=1, max_n=9))
def test_structural_bound_is_an_upper_bound(data, g):
    colors = data.draw(colorings_of(g))
    a = frozenset(data.draw(st.lists(st.integers(0, g.n_vertices - 1), unique=True)))
    for col in (1, 2):
        adj = class_adjacency(g, [i for i, c in enumerate(colors) if c == col])
        for comp in class_components(adj):
            inside = [e for e, c in zip(g.edges, colors) if c == col and e[0] in comp]
            truth = dfs_longest_path(g.n_vertices, inside)
            cert = Certificate("hub", col, a, hub=min(comp))
            assert structural_bound(adj, comp, [cover(col, a)])[0] >= truth
            assert structural_bound(adj, comp, [cert])[0] >= truth


@given(st.data(), graphs(min_n=1, max_n=9))
def test_cover_soundness(data, g):
    a = frozenset(data.draw(st.lists(st.integers(0, g.n_vertices - 1), unique=True)))
    kept = [e for e in g.edges if e[0] in a or e[1] in a]
    assert dfs_longest_path(g.n_vertices, kept) <= 2 * len(a) + 1


def test_certificate_checks():
    g = complete_graph(7)
    c = color_few_vertices(g, 6)
    red = next(ct for ct in c.certificates if ct.color == RED and ct.kind == "cover")
    assert check_certificate(g, c, red, 6)
    big = mono(g, BLUE)
    assert not check_certificate(g, big, Certificate("component", BLUE), 6)
    with pytest.raises(CertificateError):
        check_certificate(g, c, cover(RED, [9]), 6)
