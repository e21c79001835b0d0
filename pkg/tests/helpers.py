"""Independent oracles and hypothesis strategies shared by the tests."""

import itertools

import networkx as nx
from hypothesis import strategies as st

from pathramsey.graph import Graph

# one summary line per acceptance criterion, printed after the run
ACCEPTANCE: list[str] = []


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n_vertices))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph(h.number_of_nodes(), tuple(h.edges()))


def dfs_longest_path(n_vertices, edges) -> int:
    """Exhaustive simple-path enumeration; independent of the subset DP."""
    adj = {v: set() for v in range(n_vertices)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    best = 1 if n_vertices else 0

    def go(v, seen):
        nonlocal best
        best = max(best, len(seen))
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                go(w, seen)
                seen.discard(w)

    for s in range(n_vertices):
        go(s, {s})
    return best


def class_longest(g: Graph, colors, color) -> int:
    edges = [e for e, c in zip(g.edges, colors) if c == color]
    return dfs_longest_path(g.n_vertices, edges) if edges else 1


@st.composite
def graphs(draw, min_n=0, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    if connected and n > 1:
        perm = draw(st.permutations(range(n)))
        chosen = set(chosen) | {tuple(sorted((perm[i], perm[draw(st.integers(0, i - 1))]))) for i in range(1, n)}
    return Graph(n, tuple(chosen))


def _find(parent, v):
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def is_forest(n_vertices, edges) -> bool:
    parent = list(range(n_vertices))
    for u, v in edges:
        a, b = _find(parent, u), _find(parent, v)
        if a == b:
            return False
        parent[a] = b
    return True


def forest_longest_path(n_vertices, edges) -> int:
    """Vertex count of the longest path in a forest; two sweeps per tree, linear time."""
    if not is_forest(n_vertices, edges):
        raise ValueError("not a forest")
    adj = [[] for _ in range(n_vertices)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)

    def sweep(s):
        dist = {s: 0}
        frontier = [s]
        far = s
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
                        far = w
            frontier = nxt
        return far, dist

    seen = [False] * n_vertices
    best = 1 if n_vertices else 0
    for s in range(n_vertices):
        if seen[s] or not adj[s]:
            continue
        a, dist = sweep(s)
        for v in dist:
            seen[v] = True
        b, dist = sweep(a)
        best = max(best, dist[b] + 1)
    return best


def is_star_forest_oracle(edges) -> bool:
    """Acyclic, and every component has at most one vertex of degree two or more."""
    verts = sorted({v for e in edges for v in e})
    ids = {v: i for i, v in enumerate(verts)}
    local = [(ids[u], ids[v]) for u, v in edges]
    if not is_forest(len(verts), local):
        return False
    deg = [0] * len(verts)
    for u, v in local:
        deg[u] += 1
        deg[v] += 1
    # in a star every edge has an endpoint of degree one
    return all(deg[u] == 1 or deg[v] == 1 for u, v in local)
