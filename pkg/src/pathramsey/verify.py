"""Longest-path bounds for color classes.

Three kinds of evidence are combined per component of a color class:

* exact subset DP over (vertex set, endpoint) states for small components,
* a linear-time diameter computation when the component is a tree,
* structural bounds that hold for any graph: component order, edge count,
  cover sets, and repeated stripping of degree-1 vertices.

A randomized search can exhibit long paths but never certifies their absence.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .coloring import Certificate, CertificateError, ColoringError, EdgeColoring
from .graph import Graph, GraphError, components

EXACT = "exact"
TREE = "tree-exact"
COVER = "structural-cover"
COMPONENT = "structural-component"
HEURISTIC = "heuristic-lower"

SAFE = "verified-safe"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"

DEFAULT_EXACT_LIMIT = 20
DEFAULT_RESTARTS = 10_000
STRIP_LEVELS = 2


class ExactLimitError(ValueError):
    pass


class NotAForestError(GraphError):
    pass


# ---------------------------------------------------------------------------
# exact longest path


@lru_cache(maxsize=None)
def _layers(k: int) -> tuple[np.ndarray, ...]:
    masks = np.arange(1 << k, dtype=np.int64)
    pop = np.bitwise_count(masks)
    order = np.argsort(pop, kind="stable")
    bounds = np.concatenate(([0], np.cumsum(np.bincount(pop, minlength=k + 1))))
    return tuple(masks[order[bounds[s] : bounds[s + 1]]] for s in range(k + 1))


def _path_dp(adj: Sequence[int], k: int) -> tuple[np.ndarray, int]:
    """``reach[mask]`` has bit ``v`` set iff a path visits exactly ``mask`` and ends at ``v``."""
    reach = np.zeros(1 << k, dtype=np.int64)
    if k == 0:
        return reach, 0
    singles = np.left_shift(1, np.arange(k, dtype=np.int64))
    reach[singles] = singles
    layers = _layers(k)
    best = 1
    for s in range(2, k + 1):
        ms = layers[s]
        acc = np.zeros(len(ms), dtype=np.int64)
        for v in range(k):
            if not adj[v]:
                continue
            bit = 1 << v
            sel = np.flatnonzero(ms & bit)
            hit = (reach[ms[sel] ^ bit] & adj[v]) != 0
            acc[sel[hit]] |= bit
        if not acc.any():
            break
        reach[ms] = acc
        best = s
    return reach, best


def _dp_witness(reach: np.ndarray, adj: Sequence[int], k: int, size: int) -> list[int]:
    ms = _layers(k)[size]
    m = int(ms[np.flatnonzero(reach[ms])[0]])
    ends = int(reach[m])
    v = (ends & -ends).bit_length() - 1
    path = [v]
    while m & (m - 1):
        m ^= 1 << v
        cand = int(reach[m]) & adj[v]
        v = (cand & -cand).bit_length() - 1
        path.append(v)
    return path


def _local_masks(adj, comp: Sequence[int]) -> list[int]:
    local = {v: i for i, v in enumerate(comp)}
    masks = []
    for v in comp:
        m = 0
        for w in adj[v]:
            j = local.get(w)
            if j is not None:
                m |= 1 << j
        masks.append(m)
    return masks


def _exact_component(adj, comp: Sequence[int]) -> tuple[int, list[int]]:
    masks = _local_masks(adj, comp)
    reach, best = _path_dp(masks, len(comp))
    path = _dp_witness(reach, masks, len(comp), best) if best else []
    return best, [comp[i] for i in path]


def longest_path_exact(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> int:
    """Order of a longest simple path, by subset DP on each component."""
    return longest_path_exact_witness(g, limit)[0]


def longest_path_exact_witness(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> tuple[int, list[int]]:
    best, witness = 0, []
    for comp in components(g):
        if len(comp) <= best:
            break
        if len(comp) > limit:
            raise ExactLimitError(f"component of {len(comp)} vertices exceeds exact limit {limit}")
        val, path = _exact_component(g.adj, comp)
        if val > best:
            best, witness = val, path
    return best, witness


# ---------------------------------------------------------------------------
# forests


def _farthest(adj, start: int) -> tuple[int, dict[int, int]]:
    parent = {start: -1}
    queue = deque([start])
    last = start
    while queue:
        u = queue.popleft()
        last = u
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    return last, parent


def tree_longest_path(adj, start: int) -> list[int]:
    """Longest path in the tree containing ``start`` (two farthest-vertex sweeps)."""
    a, _ = _farthest(adj, start)
    b, parent = _farthest(adj, a)
    path = [b]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def longest_path_tree(f: Graph) -> int:
    comps = components(f)
    if f.n_edges != f.n_vertices - len(comps):
        raise NotAForestError("input contains a cycle")
    return max((len(tree_longest_path(f.adj, c[0])) for c in comps), default=0)


# ---------------------------------------------------------------------------
# structural bounds


def _strip_leaves(adj: dict[int, set[int]], vertices: set[int]) -> set[int]:
    return {v for v in vertices if len(adj[v] & vertices) >= 2}


def _edges_within(adj: dict[int, set[int]], vertices: set[int], avoid: frozenset[int] = frozenset()) -> int:
    total = 0
    for v in vertices:
        if v in avoid:
            continue
        for w in adj[v]:
            if w > v and w in vertices and w not in avoid:
                total += 1
    return total


def _cover_value(adj, vertices: set[int], cover_set: frozenset[int]) -> int:
    inside = len(cover_set & vertices)
    return 2 * inside + 1 + _edges_within(adj, vertices, cover_set)


def _pieces(adj, vertices: set[int]) -> list[set[int]]:
    left = set(vertices)
    out = []
    while left:
        s = left.pop()
        piece = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in left:
                    left.discard(w)
                    piece.add(w)
                    stack.append(w)
        out.append(piece)
    return out


def _hub_value(adj, vertices: set[int], cert: Certificate) -> int | None:
    if cert.hub not in vertices:
        return None
    rest = vertices - {cert.hub}
    vals = []
    for piece in _pieces(adj, rest):
        e = _edges_within(adj, piece)
        vals.append(min(len(piece), e + 1, _cover_value(adj, piece, cert.vertices)))
    vals.sort(reverse=True)
    vals += [0, 0]
    return vals[0] + vals[1] + 1


def structural_bound(
    adj: dict[int, set[int]], comp: Iterable[int], certs: Sequence[Certificate] = ()
) -> tuple[int, str]:
    """Upper bound on path order inside one connected component of a class.

    A path's interior never visits a degree-1 vertex, so bounds on the graph
    with leaves stripped ``k`` times, plus ``2k``, also bound the original.
    """
    layer = set(comp)
    best, kind = len(layer), COMPONENT
    for k in range(STRIP_LEVELS + 1):
        if not layer:
            if 2 * k < best:
                best, kind = 2 * k, COMPONENT
            break
        extra = 2 * k
        cands = [
            (len(layer) + extra, COMPONENT),
            (_edges_within(adj, layer) + 1 + extra, COMPONENT),
        ]
        for cert in certs:
            if cert.kind == "cover":
                cands.append((_cover_value(adj, layer, cert.vertices) + extra, COVER))
            elif cert.kind == "hub":
                val = _hub_value(adj, layer, cert)
                if val is not None:
                    cands.append((val + extra, COVER))
        for val, kd in cands:
            if val < best:
                best, kind = val, kd
        layer = _strip_leaves(adj, layer)
    return best, kind


def class_adjacency(g: Graph, indices: Iterable[int]) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for i in indices:
        u, v = g.edges[i]
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def class_components(adj: dict[int, set[int]]) -> list[list[int]]:
    comps = [sorted(p) for p in _pieces(adj, set(adj))]
    comps.sort(key=lambda c: (-len(c), c[0]))
    return comps


# ---------------------------------------------------------------------------
# heuristic search


def random_long_path(adj: dict[int, set[int]], comp: Sequence[int], target: int, restarts: int, rng: random.Random) -> list[int]:
    """Randomized self-avoiding walks grown at both ends; returns the longest found."""
    nbrs = {v: sorted(adj[v]) for v in comp}
    best: list[int] = [comp[0]] if comp else []
    for _ in range(restarts):
        start = rng.choice(comp)
        path = deque([start])
        used = {start}
        for grow_left in (False, True):
            while True:
                end = path[0] if grow_left else path[-1]
                options = [w for w in nbrs[end] if w not in used]
                if not options:
                    break
                w = rng.choice(options)
                used.add(w)
                if grow_left:
                    path.appendleft(w)
                else:
                    path.append(w)
        if len(path) > len(best):
            best = list(path)
            if len(best) >= target:
                break
    return best


# ---------------------------------------------------------------------------
# reports


@dataclass
class ColorBound:
    color: int
    bound: int
    kind: str
    n_edges: int


@dataclass
class ColoringReport:
    n: int
    r: int
    entries: list[ColorBound]
    verdict: str
    witness: list[int] | None = None
    witness_color: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def safe(self) -> bool:
        return self.verdict == SAFE

    @property
    def exit_code(self) -> int:
        return {SAFE: 0, REFUTED: 1}.get(self.verdict, 2)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"verdict: {self.verdict}", f"n: {self.n}", f"colors: {self.r}"]
        for e in self.entries:
            lines += ["", f"color: {e.color}", f"edges: {e.n_edges}", f"bound: {e.bound}", f"certificate: {e.kind}"]
        if self.witness is not None:
            lines += ["", f"witness_color: {self.witness_color}", "witness: " + " ".join(map(str, self.witness))]
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines) + "\n"


def check_witness(g: Graph, c: EdgeColoring, path: Sequence[int], n: int) -> bool:
    """True iff ``path`` is a simple monochromatic path with at least ``n`` vertices."""
    if len(path) < n or len(set(path)) != len(path):
        return False
    if any(not 0 <= v < g.n_vertices for v in path):
        return False
    seen_colors = set()
    for u, v in zip(path, path[1:]):
        if not g.has_edge(u, v):
            return False
        seen_colors.add(c.colors[g.index_of(u, v)])
    return len(seen_colors) <= 1


def verify_coloring(
    g: Graph,
    c: EdgeColoring,
    n: int | None = None,
    mode: str = "auto",
    certificates: Sequence[Certificate] | None = None,
    exact_limit: int = DEFAULT_EXACT_LIMIT,
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
) -> ColoringReport:
    """Decide whether ``c`` has a monochromatic path with ``n`` or more vertices.

    ``mode`` is ``exact`` (every component solved exactly), ``structural``
    (no exponential work, no search) or ``auto`` (cheapest evidence first).
    """
    if mode not in ("auto", "exact", "structural"):
        raise ValueError(f"unknown mode {mode!r}")
    c.check(g)
    n = c.n if n is None else n
    certs = c.certificates if certificates is None else tuple(certificates)
    rng = random.Random(seed)

    if n <= 1 and g.n_vertices > 0:
        entries = [ColorBound(col, 1 if g.n_vertices else 0, COMPONENT, 0) for col in range(1, c.r + 1)]
        return ColoringReport(n, c.r, entries, REFUTED, [0], 1)

    entries = []
    verdict = SAFE
    witness = None
    witness_color = None
    for col in range(1, c.r + 1):
        idx = c.class_indices(col)
        adj = class_adjacency(g, idx)
        col_certs = [ct for ct in certs if ct.color == col]
        merged = _merged_cover(col_certs)
        if merged is not None:
            col_certs.append(merged)
        entry, found = _bound_class(g, adj, col_certs, n, mode, exact_limit, restarts, rng)
        entry.color, entry.n_edges = col, len(idx)
        entries.append(entry)
        if found is not None and witness is None:
            witness, witness_color = found, col
            verdict = REFUTED
        elif entry.kind == HEURISTIC and verdict == SAFE:
            verdict = INCONCLUSIVE
    if witness is not None:
        verdict = REFUTED
    return ColoringReport(n, c.r, entries, verdict, witness, witness_color)


def _merged_cover(certs: Sequence[Certificate]) -> Certificate | None:
    covers = [ct for ct in certs if ct.kind == "cover"]
    if len(covers) < 2:
        return None
    return Certificate("cover", covers[0].color, frozenset().union(*(ct.vertices for ct in covers)))


def _bound_class(g, adj, certs, n, mode, exact_limit, restarts, rng):
    base = 1 if g.n_vertices else 0
    best = ColorBound(0, base, COMPONENT, 0)
    if not adj:
        return best, None
    comps = class_components(adj)
    for comp in comps:
        if mode != "exact":
            bound, kind = structural_bound(adj, comp, certs)
            if bound < n:
                _raise(best, bound, kind)
                continue
        n_edges = _edges_within(adj, set(comp))
        if n_edges == len(comp) - 1:
            path = tree_longest_path(adj, comp[0])
            _raise(best, len(path), TREE)
            if len(path) >= n:
                return best, path
            continue
        if mode == "structural":
            _raise(best, bound, HEURISTIC)
            continue
        if len(comp) <= exact_limit:
            val, path = _exact_component(adj, comp)
            _raise(best, val, EXACT)
            if val >= n:
                return best, path
            continue
        if mode == "exact":
            raise ExactLimitError(f"component of {len(comp)} vertices exceeds exact limit {exact_limit}")
        path = random_long_path(adj, comp, n, restarts, rng)
        if len(path) >= n:
            _raise(best, len(path), HEURISTIC)
            return best, path
        best.bound = max(best.bound, len(path)) if best.kind == HEURISTIC else len(path)
        best.kind = HEURISTIC
    return best, None


def _raise(entry: ColorBound, bound: int, kind: str) -> None:
    if entry.kind == HEURISTIC:
        return
    if bound > entry.bound or (bound == entry.bound and kind == HEURISTIC):
        entry.bound, entry.kind = bound, kind


def check_certificate(g: Graph, c: EdgeColoring, cert: Certificate, n: int | None = None) -> bool:
    """True iff ``cert`` holds on ``g`` and by itself bounds its class below ``n``."""
    n = c.n if n is None else n
    c.check(g)
    if not 1 <= cert.color <= c.r:
        raise CertificateError(f"certificate color {cert.color} outside 1..{c.r}")
    named = set(cert.vertices).union(*cert.blocks)
    if cert.hub is not None:
        named.add(cert.hub)
    bad = [v for v in named if not 0 <= v < g.n_vertices]
    if bad:
        raise CertificateError(f"certificate names vertex {bad[0]} not below N={g.n_vertices}")
    adj = class_adjacency(g, c.class_indices(cert.color))
    comps = class_components(adj)
    if cert.kind == "component":
        return all(len(comp) < n for comp in comps)
    if cert.kind == "confine":
        blocks = cert.blocks
        if any(len(b) >= n for b in blocks):
            return False
        for i in c.class_indices(cert.color):
            u, v = g.edges[i]
            if not any(u in b and v in b for b in blocks):
                return False
        return True
    return all(_cert_only_bound(adj, comp, cert) < n for comp in comps)


def _cert_only_bound(adj, comp, cert: Certificate) -> int:
    layer = set(comp)
    best = len(layer)
    for k in range(STRIP_LEVELS + 1):
        if not layer:
            return min(best, 2 * k)
        if cert.kind == "cover":
            val = _cover_value(adj, layer, cert.vertices)
        else:
            val = _hub_value(adj, layer, cert)
            if val is None:
                val = _cover_value(adj, layer, cert.vertices)
        best = min(best, val + 2 * k)
        layer = _strip_leaves(adj, layer)
    return best
