"""Deterministic edge and vertex decompositions.

* covering star forests and the ``sa(G) <= max degree`` star decomposition,
* cutting middle edges of long paths until a forest has no long path,
* splitting a connected graph into connected chunks of controlled size.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass

from .graph import DisconnectedError, Graph, GraphError, components, spanning_forest, spanning_tree
from .verify import NotAForestError


@dataclass(frozen=True)
class StarForestDecomposition:
    classes: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class ConnectedPartition:
    parts: tuple[tuple[int, ...], ...]
    ell: int

    @property
    def t(self) -> int:
        return len(self.parts)


def _star_forest_from(g: Graph, forest_edges: list[int]) -> list[int]:
    nbrs: dict[int, set[int]] = {}
    for i in forest_edges:
        u, v = g.edges[i]
        nbrs.setdefault(u, set()).add(v)
        nbrs.setdefault(v, set()).add(u)
    heap = [v for v, s in nbrs.items() if len(s) == 1]
    heapq.heapify(heap)
    chosen = []
    while heap:
        z = heapq.heappop(heap)
        if z not in nbrs or len(nbrs[z]) != 1:
            continue
        (y,) = nbrs[z]
        leaves = sorted(w for w in nbrs[y] if len(nbrs[w]) == 1)
        chosen.extend(g.index_of(y, w) for w in leaves)
        star = {y, *leaves}
        for c in star:
            for u in nbrs.pop(c):
                if u in star:
                    continue
                nbrs[u].discard(c)
                if len(nbrs[u]) == 1:
                    heapq.heappush(heap, u)
                elif not nbrs[u]:
                    raise AssertionError("peeling left an isolated vertex")
    return sorted(chosen)


def covering_star_forest(g: Graph) -> list[int]:
    """Star forest (edge indices) meeting every vertex; ``g`` must have no isolated vertex.

    Peels a spanning forest: take the smallest leaf ``z``, its neighbour ``y``
    and every leaf hanging at ``y`` as one star, delete them, repeat.
    """
    isolated = [v for v in range(g.n_vertices) if g.degree(v) == 0]
    if isolated:
        raise GraphError(f"vertex {isolated[0]} is isolated")
    return _star_forest_from(g, spanning_forest(g))


def is_star_forest(g: Graph, indices) -> bool:
    sub = g.edge_subgraph(indices)
    for comp in components(sub):
        if len(comp) == 1:
            continue
        m = sum(sub.degree(v) for v in comp) // 2
        if m != len(comp) - 1:
            return False
        if sum(1 for v in comp if sub.degree(v) >= 2) > 1:
            return False
    return True


def star_decompose(g: Graph) -> StarForestDecomposition:
    remaining = set(range(g.n_edges))
    classes = []
    while remaining:
        sub = g.edge_subgraph(sorted(remaining))
        star = _star_forest_from(sub, spanning_forest(sub))
        picked = [g.index_of(*sub.edges[i]) for i in star]
        classes.append(tuple(sorted(picked)))
        remaining.difference_update(picked)
    return StarForestDecomposition(tuple(classes))


def prune_long_paths(t: Graph, n: int) -> tuple[list[int], Graph]:
    """Delete middle edges of long paths until no path has ``n`` vertices.

    Works per tree of the forest ``t``.  Every tree must have at least
    ``n // 2`` vertices; then each cut leaves both sides with at least that
    many, so at most ``N // (n // 2) - 1`` edges are removed.
    """
    if n < 2:
        raise GraphError("n must be at least 2")
    comps = components(t)
    if t.n_edges != t.n_vertices - len(comps):
        raise NotAForestError("input contains a cycle")
    half = n // 2
    small = [c for c in comps if len(c) < half]
    if small:
        raise GraphError(f"tree of {len(small[0])} vertices is smaller than n//2 = {half}")
    adj = [set(a) for a in t.adj]
    cut = []
    work = [c[0] for c in comps if len(c) >= n]
    while work:
        start = work.pop()
        path = _diameter_path(adj, start)
        if len(path) < n:
            continue
        if path[0] > path[-1]:
            path.reverse()
        i = (len(path) - 1) // 2
        a, b = path[i], path[i + 1]
        adj[a].discard(b)
        adj[b].discard(a)
        cut.append(t.index_of(a, b))
        work.extend((a, b))
    cut.sort()
    dropped = set(cut)
    return cut, t.edge_subgraph(i for i in range(t.n_edges) if i not in dropped)


def _diameter_path(adj, start: int) -> list[int]:
    a = _bfs_far(adj, start)[0]
    b, parent = _bfs_far(adj, a)
    path = [b]
    while parent[path[-1]] >= 0:
        path.append(parent[path[-1]])
    return path


def _bfs_far(adj, start: int):
    parent = {start: -1}
    queue = deque([start])
    u = start
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    return u, parent


def partition_connected(g: Graph, ell: int) -> ConnectedPartition:
    """Cut a rooted spanning tree into connected parts of order in ``(ell, 1 + Δ·ell]``.

    Vertices are handled in post-order with children in ascending id; a
    non-root vertex whose remaining subtree exceeds ``ell`` is cut off with
    that subtree.  The root's remainder is the last part.
    """
    p = g.n_vertices
    if not 1 <= ell < p:
        raise GraphError(f"ell={ell} outside [1, {p})")
    tree = spanning_tree(g, 0, "bfs")
    kids = tree.children
    size = [1] * p
    detached = [False] * p
    parts = []
    for v in reversed(tree.order):
        size[v] = 1 + sum(size[c] for c in kids[v] if not detached[c])
        if v != tree.root and size[v] > ell:
            parts.append(tuple(sorted(_collect(v, kids, detached))))
            detached[v] = True
    parts.append(tuple(sorted(_collect(tree.root, kids, detached))))
    return ConnectedPartition(tuple(parts), ell)


def _collect(v: int, kids, detached) -> list[int]:
    out = [v]
    stack = [v]
    while stack:
        u = stack.pop()
        for c in kids[u]:
            if not detached[c]:
                out.append(c)
                stack.append(c)
    return out


def chunk_components(g: Graph, ell: int) -> list[tuple[int, ...]]:
    """Connected chunks covering ``g``: components of order at most ``ell`` stay whole."""
    chunks = []
    for comp in components(g):
        if len(comp) <= ell:
            chunks.append(tuple(comp))
            continue
        sub = g.induced(comp)
        for part in partition_connected(sub, ell).parts:
            chunks.append(tuple(sorted(sub.ids[v] for v in part)))
    return chunks


def tree_partition_properties(g: Graph, cp: ConnectedPartition) -> dict[str, bool]:
    """Check T1-T3 and per-part connectivity independently of the construction."""
    p, ell, delta = g.n_vertices, cp.ell, g.max_degree
    flat = sorted(v for part in cp.parts for v in part)
    t1 = flat == list(range(p))
    for i, part in enumerate(cp.parts):
        lo_ok = len(part) > ell or i == len(cp.parts) - 1
        t1 = t1 and lo_ok and len(part) <= 1 + delta * ell
    inside = sum(g.induced(part).n_edges for part in cp.parts)
    t2 = inside >= p - cp.t
    connected = all(len(components(g.induced(part))) == 1 for part in cp.parts)
    out = {"T1": t1, "T2": t2, "connected": connected}
    if ell == math.isqrt(p):
        root = math.sqrt(p)
        out["T3"] = root / (delta + 1) <= cp.t <= root + 1
    return out
