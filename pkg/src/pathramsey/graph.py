"""Simple undirected graphs, the plain-text graph format, and basic traversals.

Vertices are dense integers ``0..N-1``.  The edge list is kept sorted, so an
edge's position in ``Graph.edges`` is a stable identity that colorings index
into.  Subgraphs carry ``ids``, the map from their local vertex ids back to
the graph they were cut from.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for structurally invalid graphs."""


class ParseError(GraphError):
    pass


class HeaderError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class DisconnectedError(GraphError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    n_vertices: int
    edges: tuple[Edge, ...]
    ids: tuple[int, ...] | None = None
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = self.n_vertices
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        canon = []
        for u, v in self.edges:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) out of range for N={n}")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise DuplicateEdgeError(f"duplicate edge {a}")
        if self.ids is not None and len(self.ids) != n:
            raise GraphError("id map length differs from vertex count")
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def index_of(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph on ``vertices``; local ids follow ascending order."""
        keep = sorted(set(vertices))
        local = {v: i for i, v in enumerate(keep)}
        edges = [
            (local[u], local[v])
            for u, v in self.edges
            if u in local and v in local
        ]
        return Graph(len(keep), tuple(edges), ids=tuple(keep))

    def remove_vertices(self, vertices: Iterable[int]) -> Graph:
        drop = set(vertices)
        return self.induced(v for v in range(self.n_vertices) if v not in drop)

    def edge_subgraph(self, indices: Iterable[int]) -> Graph:
        """Spanning subgraph (same vertex ids) keeping only the given edges."""
        return Graph(self.n_vertices, tuple(self.edges[i] for i in indices))

    def to_parent(self, v: int) -> int:
        return v if self.ids is None else self.ids[v]


def parse_graph(text: str | bytes) -> Graph:
    """Read ``graph N M`` followed by ``M`` lines ``u v`` (0-indexed)."""
    if isinstance(text, bytes):
        text = text.decode()
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise HeaderError("empty input")
    head = lines[0]
    if len(head) != 3 or head[0] != "graph":
        raise HeaderError(f"expected 'graph N M', got {' '.join(head)!r}")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError:
        raise HeaderError(f"non-integer header {' '.join(head)!r}") from None
    if n < 0 or m < 0:
        raise HeaderError("negative header values")
    body = lines[1:]
    if len(body) != m:
        raise HeaderError(f"header announces {m} edges, found {len(body)}")
    edges = []
    seen = set()
    for row in body:
        if len(row) != 2:
            raise ParseError(f"bad edge line {' '.join(row)!r}")
        try:
            u, v = int(row[0]), int(row[1])
        except ValueError:
            raise ParseError(f"bad edge line {' '.join(row)!r}") from None
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"vertex id in ({u}, {v}) not below N={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph(n, tuple(edges))


def serialize_graph(g: Graph) -> str:
    out = [f"graph {g.n_vertices} {g.n_edges}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted; largest first, ties by smallest vertex."""
    seen = [False] * g.n_vertices
    comps = []
    for s in range(g.n_vertices):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        comps.append(comp)
    comps.sort(key=lambda c: (-len(c), c[0]))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n_vertices <= 1 or len(components(g)) == 1


@dataclass(frozen=True)
class RootedTree:
    root: int
    parent: tuple[int | None, ...]
    kind: str
    order: tuple[int, ...]
    depth: tuple[int, ...]

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in self.parent]
        for v in self.order:
            p = self.parent[v]
            if p is not None:
                kids[p].append(v)
        return tuple(tuple(k) for k in kids)

    def subtree(self, v: int) -> list[int]:
        """Vertices of the subtree hanging at ``v`` in preorder."""
        out = []
        stack = [v]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(reversed(self.children[u]))
        return out

    def is_ancestor(self, a: int, b: int) -> bool:
        while b is not None:
            if b == a:
                return True
            b = self.parent[b]
        return False


def spanning_tree(g: Graph, root: int, kind: str = "bfs") -> RootedTree:
    if not 0 <= root < g.n_vertices:
        raise GraphError(f"root {root} out of range")
    if kind == "bfs":
        tree = _bfs_tree(g, root)
    elif kind == "dfs":
        tree = _dfs_tree(g, root)
    else:
        raise GraphError(f"unknown tree kind {kind!r}")
    if len(tree.order) != g.n_vertices:
        raise DisconnectedError("graph is not connected")
    return tree


def _bfs_tree(g: Graph, root: int) -> RootedTree:
    n = g.n_vertices
    parent: list[int | None] = [None] * n
    depth = [-1] * n
    depth[root] = 0
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if depth[w] < 0:
                depth[w] = depth[u] + 1
                parent[w] = u
                order.append(w)
                queue.append(w)
    return RootedTree(root, tuple(parent), "bfs", tuple(order), tuple(depth))


def _dfs_tree(g: Graph, root: int) -> RootedTree:
    n = g.n_vertices
    parent: list[int | None] = [None] * n
    depth = [-1] * n
    depth[root] = 0
    order = [root]
    stack = [(root, 0)]
    while stack:
        u, i = stack[-1]
        nbrs = g.adj[u]
        while i < len(nbrs) and depth[nbrs[i]] >= 0:
            i += 1
        if i == len(nbrs):
            stack.pop()
            continue
        stack[-1] = (u, i + 1)
        w = nbrs[i]
        parent[w] = u
        depth[w] = depth[u] + 1
        order.append(w)
        stack.append((w, 0))
    return RootedTree(root, tuple(parent), "dfs", tuple(order), tuple(depth))


def spanning_forest(g: Graph) -> list[int]:
    """Edge indices of a BFS spanning forest, one tree per component."""
    seen = [False] * g.n_vertices
    chosen = []
    for s in range(g.n_vertices):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    chosen.append(g.index_of(u, w))
                    queue.append(w)
    chosen.sort()
    return chosen


def low_degree_peel(g: Graph, r: int) -> tuple[list[int], Graph]:
    """One-shot removal of every vertex of degree at most ``r``.

    Returns the removed set and ``g - S`` with ids pointing back into ``g``.
    """
    if r < 1:
        raise GraphError("r must be positive")
    low = [v for v in range(g.n_vertices) if g.degree(v) <= r]
    return low, g.remove_vertices(low)


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n_vertices
    return Graph(offset, tuple(edges))
