"""Self-contained 2- and r-colorings with no long monochromatic path.

Every construction returns an ``EdgeColoring`` whose ``n`` is the path order
it avoids, together with certificates the verifier can use at any scale.
Fractional size caps are floored, which is the safe direction for each.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .coloring import BLUE, RED, Certificate, EdgeColoring, PreconditionError, confine, cover
from .graph import Graph, components, spanning_tree
from .verify import SAFE, class_adjacency, verify_coloring


class NearThresholdError(PreconditionError):
    pass


def _paint(g: Graph, rule: Callable[[int, int], int]) -> tuple[int, ...]:
    return tuple(rule(u, v) for u, v in g.edges)


def _check_n(n: int, low: int = 2) -> None:
    if n < low:
        raise PreconditionError(f"n={n} below {low}")


def _as_set(vertices: Iterable[int], g: Graph, what: str) -> frozenset[int]:
    vs = frozenset(vertices)
    bad = [v for v in vs if not 0 <= v < g.n_vertices]
    if bad:
        raise PreconditionError(f"{what} names vertex {bad[0]} outside the graph")
    return vs


# ---------------------------------------------------------------------------
# few vertices


def color_few_vertices(g: Graph, n: int) -> EdgeColoring:
    """Two colors when ``N <= floor(3n/2) - 2``.

    The ``N - (n-1)`` lowest ids form ``X1``; edges meeting ``X1`` are red,
    the rest (inside ``X2``) blue.
    """
    _check_n(n)
    cap = (3 * n) // 2 - 2
    if g.n_vertices > cap:
        raise PreconditionError(f"N={g.n_vertices} exceeds floor(3n/2)-2={cap}")
    x1 = frozenset(range(max(0, g.n_vertices - (n - 1))))
    x2 = frozenset(range(len(x1), g.n_vertices))
    colors = _paint(g, lambda u, v: RED if u in x1 or v in x1 else BLUE)
    certs = (cover(RED, x1), confine(BLUE, x2))
    return EdgeColoring(colors, 2, n, "few-vertices", certs, (("X1", x1), ("X2", x2)))


def _owner(block: int, r: int) -> int:
    return block + 1 if block < r - 1 else block - (r - 1) + 1


def color_few_vertices_r(g: Graph, n: int, r: int) -> EdgeColoring:
    """``r >= 3`` colors on at most ``(2r-2)·(floor(n/2)-1)`` vertices.

    Blocks are filled in id order.  A pair of blocks at cyclic distance
    ``r-1`` gets color ``r``; any other pair is colored by the owner of the
    start of its short arc, and a block's internal edges go to its owner.
    Color ``i`` then lives on two vertex-disjoint halves, each covered by one
    block.
    """
    if r < 3:
        raise PreconditionError(f"r={r} must be at least 3")
    _check_n(n, 4)
    size = n // 2 - 1
    m = 2 * r - 2
    if g.n_vertices > m * size:
        raise PreconditionError(f"N={g.n_vertices} exceeds (2r-2)(floor(n/2)-1)={m * size}")
    block_of = [v // size for v in range(g.n_vertices)] if size else []
    blocks = [frozenset(v for v in range(g.n_vertices) if block_of[v] == j) for j in range(m)]

    def rule(u: int, v: int) -> int:
        a, b = block_of[u], block_of[v]
        if a == b:
            return _owner(a, r)
        dist = (b - a) % m
        if dist == r - 1:
            return r
        start = a if dist < r - 1 else b
        return _owner(start, r)

    colors = _paint(g, rule)
    certs = [cover(i, blocks[i - 1] | blocks[i - 1 + r - 1]) for i in range(1, r)]
    certs.append(confine(r, *(blocks[j] | blocks[j + r - 1] for j in range(r - 1))))
    parts = tuple((f"X{j + 1}", blocks[j]) for j in range(m))
    return EdgeColoring(colors, r, n, "few-vertices-r", tuple(certs), parts)


# ---------------------------------------------------------------------------
# separators and sparse cores


def color_separator(
    g: Graph, n: int, s: Iterable[int], mode: str = "auto", exact_limit: int = 20
) -> EdgeColoring:
    """Edges meeting ``S`` red, the rest blue; ``g - S`` must have no path of order ``n``."""
    _check_n(n)
    sep = _as_set(s, g, "S")
    if len(sep) > n // 2 - 1:
        raise PreconditionError(f"|S|={len(sep)} exceeds floor(n/2)-1={n // 2 - 1}")
    colors = _paint(g, lambda u, v: RED if u in sep or v in sep else BLUE)
    certs = [cover(RED, sep)]
    rest = g.remove_vertices(sep)
    if all(len(c) < n for c in components(rest)):
        certs.append(Certificate("component", BLUE))
    out = EdgeColoring(colors, 2, n, "separator", tuple(certs), (("S", sep),))
    _require_class_safe(g, out, BLUE, "g - S", mode, exact_limit)
    return out


def color_sparse_core(
    g: Graph, n: int, h: Iterable[int], mode: str = "auto", exact_limit: int = 20
) -> EdgeColoring:
    """Edges of ``H`` (edge indices) red, everything else blue."""
    _check_n(n)
    red = frozenset(h)
    if any(not 0 <= i < g.n_edges for i in red):
        raise PreconditionError("H names an edge index outside the graph")
    colors = tuple(RED if i in red else BLUE for i in range(g.n_edges))
    rest = g.edge_subgraph(i for i in range(g.n_edges) if i not in red)
    big = [c for c in components(rest) if len(c) >= n]
    if big:
        raise PreconditionError(f"a component of G - E(H) has {len(big[0])} >= n vertices")
    out = EdgeColoring(colors, 2, n, "sparse-core", (Certificate("component", BLUE),))
    _require_class_safe(g, out, RED, "H", mode, exact_limit)
    return out


def _require_class_safe(g, c: EdgeColoring, color: int, what: str, mode: str, exact_limit: int) -> None:
    only = EdgeColoring(
        tuple(1 if col == color else 2 for col in c.colors),
        2,
        c.n,
        certificates=tuple(ct.recolor(1) for ct in c.certificates if ct.color == color),
    )
    report = verify_coloring(g, only, mode=mode, exact_limit=exact_limit)
    if report.entries[0].bound >= c.n or report.entries[0].kind == "heuristic-lower":
        raise PreconditionError(f"{what} is not certified free of paths of order {c.n}")


# ---------------------------------------------------------------------------
# near the 3n/2 threshold


@dataclass(frozen=True)
class NearThresholdParams:
    eps: Fraction
    d: int | None = None

    def __post_init__(self) -> None:
        eps = Fraction(self.eps)
        object.__setattr__(self, "eps", eps)
        if not 0 < eps < Fraction(1, 6):
            raise PreconditionError(f"eps={eps} outside (0, 1/6)")
        if self.d is not None and not 4 <= self.d <= 100:
            raise PreconditionError(f"d={self.d} outside [4, 100]")

    def degree_cap(self, sigma: Fraction) -> int:
        if self.d is not None:
            return self.d
        return 4 if sigma >= Fraction(1, 8) else 5


def near_threshold_sigma(n: int, u_size: int, q: int) -> Fraction:
    """``sigma`` with ``|U| = 3(n-2)/2 - 2 - q + sigma·n``."""
    return (u_size + q - Fraction(3 * (n - 2), 2) + 2) / n


def near_threshold_budget(n: int, sigma: Fraction, d: int, eps: Fraction) -> Fraction:
    return (Fraction(3 * (d + 1), 4) + Fraction(3, 2) * sigma - eps) * n


def color_near_threshold(
    g: Graph,
    n: int,
    u: Iterable[int],
    v0: Iterable[int],
    params: NearThresholdParams,
    strict: bool = False,
) -> EdgeColoring:
    """Split ``U`` into ``X, Y, Z`` and color so no path has ``n - 2`` vertices.

    ``V(g)`` must be ``U`` plus ``V0``.  ``X`` takes low-degree vertices of
    ``H = g[U]``; ``Y`` holds their outside neighbours, after a matching
    pushes one neighbour per ``X``-vertex into ``Z`` when ``Y`` is too big.
    Inside ``X ∪ Y`` and inside ``Z`` is blue, across is red; ``V0`` is blue
    towards ``X ∪ Y ∪ V0`` and red towards ``Z``.
    """
    uset = _as_set(u, g, "U")
    v0set = _as_set(v0, g, "V0")
    if uset & v0set or len(uset) + len(v0set) != g.n_vertices:
        raise PreconditionError("U and V0 must partition the vertex set")
    q = len(v0set)
    sigma = near_threshold_sigma(n, len(uset), q)
    d = params.degree_cap(sigma)
    eps = params.eps
    budget = near_threshold_budget(n, sigma, d, eps)
    if g.n_edges > budget:
        raise NearThresholdError(f"|E|={g.n_edges} > ((3(d+1)+6sigma)/4 - eps)n = {float(budget):.3f}")
    if strict:
        _strict_near_threshold(g, n, sigma, d, q, eps)

    hadj = class_adjacency(g, (i for i, (a, b) in enumerate(g.edges) if a in uset and b in uset))
    deg = {v: len(hadj.get(v, ())) for v in uset}
    y_cap = (n - 6) // 2 - q
    if y_cap < 0:
        raise NearThresholdError(f"floor((n-6)/2) - q = {y_cap} < 0")
    x_target = math.floor((sigma + eps / (d - 1)) * n)
    x_size = max(x_target, len(uset) - y_cap - (n - 3), 0)
    x_star = sorted((v for v in uset if deg[v] <= d), key=lambda v: (deg[v], v))
    if len(x_star) < x_size:
        raise NearThresholdError(f"|X*|={len(x_star)} < required |X|={x_size}")
    x = frozenset(x_star[:x_size])
    y_star = {w for v in x for w in hadj.get(v, ()) if w not in x}

    moved: set[int] = set()
    if len(y_star) > y_cap:
        x_deg = {w: sum(1 for z in hadj[w] if z in x) for w in y_star}
        y1 = {w for w in y_star if x_deg[w] == 1}
        for v in sorted(x):
            hits = sorted(w for w in hadj.get(v, ()) if w in y1)
            if hits:
                moved.add(hits[0])
    y_prime = y_star - moved
    if len(y_prime) > y_cap:
        raise NearThresholdError(f"|Y'|={len(y_prime)} > floor((n-6)/2) - q = {y_cap}")
    fillers = [v for v in sorted(uset) if v not in x and v not in y_prime]
    y = frozenset(y_prime) | frozenset(fillers[: y_cap - len(y_prime)])
    z = frozenset(uset - x - y)

    for v in x:
        if sum(1 for w in hadj.get(v, ()) if w in z) > 1:
            raise NearThresholdError(f"X-vertex {v} has more than one neighbour in Z")
    if len(z) > n - 3:
        raise NearThresholdError(f"|Z|={len(z)} > n-3")
    if len(x) + len(y) + q > n - 3:
        raise NearThresholdError(f"|X|+|Y|+|V0|={len(x) + len(y) + q} > n-3")

    low = x | y

    def rule(a: int, b: int) -> int:
        if a in v0set or b in v0set:
            other = b if a in v0set else a
            return RED if other in z else BLUE
        return BLUE if (a in z) == (b in z) else RED

    colors = _paint(g, rule)
    certs = (cover(RED, y | v0set), confine(BLUE, low | v0set, z))
    parts = (("X", x), ("Y", y), ("Z", z), ("V0", v0set))
    return EdgeColoring(colors, 2, n - 2, "near-threshold", certs, parts)


def _strict_near_threshold(g, n, sigma, d, q, eps) -> None:
    if g.min_degree < 3:
        raise NearThresholdError(f"minimum degree {g.min_degree} < 3")
    if not 0 < sigma <= Fraction(1, 6) - eps:
        raise NearThresholdError(f"sigma={float(sigma):.4f} outside (0, 1/6 - eps]")
    if not 4 <= d <= min((Fraction(1, 2) - 3 * eps) / sigma + 1, 100):
        raise NearThresholdError(f"d={d} outside [4, min((1/2-3eps)/sigma+1, 100)]")
    if q > eps * n / (d + 1) - 5:
        raise NearThresholdError(f"q={q} > eps·n/(d+1) - 5")


# ---------------------------------------------------------------------------
# orderings and search trees


def color_bandwidth(g: Graph, n: int, ordering: Iterable[int]) -> EdgeColoring:
    """Blocks of ``floor(n/2)-1`` consecutive vertices in ``ordering``.

    Odd blocks own red, even blocks own blue; a block's color covers its
    inside and its edges to the next block.
    """
    order = list(ordering)
    if sorted(order) != list(range(g.n_vertices)):
        raise PreconditionError("ordering is not a permutation of the vertices")
    _check_n(n)
    width = n // 2 - 1
    pos = {v: i for i, v in enumerate(order)}
    worst = max((abs(pos[a] - pos[b]) for a, b in g.edges), default=0)
    if worst > width:
        raise PreconditionError(f"ordering has bandwidth {worst} > floor(n/2)-1={width}")
    if not g.n_edges:
        return EdgeColoring((), 2, n, "bandwidth")
    block = [pos[v] // width for v in range(g.n_vertices)]
    colors = _paint(g, lambda a, b: RED if min(block[a], block[b]) % 2 == 0 else BLUE)
    t = max(block) + 1
    members = [frozenset(v for v in range(g.n_vertices) if block[v] == j) for j in range(t)]
    pairs = [members[j] | (members[j + 1] if j + 1 < t else frozenset()) for j in range(t)]
    certs = (confine(RED, *pairs[0::2]), confine(BLUE, *pairs[1::2]))
    return EdgeColoring(colors, 2, n, "bandwidth", certs)


def color_dfs(g: Graph, n: int, x: int) -> EdgeColoring:
    """Red from ``A`` (the root plus a prefix of each big child subtree), blue inside ``B``.

    A child subtree with at most ``n-1`` vertices goes wholly to ``B``;
    a larger one gives its first ``|S|-(n-1)`` preorder vertices to ``A``.
    """
    _check_n(n, 4)
    tree = spanning_tree(g, x, "dfs")
    cap = (5 * n) // 4 - 2
    a_set = {x}
    b_blocks = []
    for y in tree.children[x]:
        sub = tree.subtree(y)
        if len(sub) > cap:
            raise PreconditionError(f"subtree at child {y} has {len(sub)} > floor(5n/4)-2={cap} vertices")
        head = max(0, len(sub) - (n - 1))
        a_set.update(sub[:head])
        b_blocks.append(frozenset(sub[head:]))
    a = frozenset(a_set)
    colors = _paint(g, lambda u, v: RED if u in a or v in a else BLUE)
    certs = (Certificate("hub", RED, a - {x}, hub=x), confine(BLUE, *b_blocks))
    return EdgeColoring(colors, 2, n, "dfs", certs, (("A", a),))


def color_bfs(g: Graph, n: int, x: int) -> EdgeColoring:
    """Levels ``D_i`` from ``x``; edges whose lower level is even are red, odd blue."""
    _check_n(n)
    tree = spanning_tree(g, x, "bfs")
    depth = tree.depth
    top = max(depth, default=0)
    levels = [frozenset(v for v in range(g.n_vertices) if depth[v] == i) for i in range(top + 2)]
    for i in range(top + 1):
        if len(levels[i]) + len(levels[i + 1]) >= n:
            raise PreconditionError(f"levels {i} and {i + 1} hold {len(levels[i]) + len(levels[i + 1])} >= n vertices")
    colors = _paint(g, lambda u, v: RED if min(depth[u], depth[v]) % 2 == 0 else BLUE)
    pairs = [levels[i] | levels[i + 1] for i in range(top + 1)]
    certs = (confine(RED, *pairs[0::2]), confine(BLUE, *pairs[1::2]))
    return EdgeColoring(colors, 2, n, "bfs", certs)


def color_independent(g: Graph, n: int, s: Iterable[int]) -> EdgeColoring:
    """``V - S`` split into ``X`` and ``Y`` of at most ``floor(n/2)-1`` each; ``X`` red, ``Y`` blue."""
    _check_n(n)
    ind = _as_set(s, g, "S")
    for a, b in g.edges:
        if a in ind and b in ind:
            raise PreconditionError(f"S is not independent: edge ({a}, {b})")
    half = n // 2 - 1
    rest = [v for v in range(g.n_vertices) if v not in ind]
    if len(rest) > 2 * half:
        raise PreconditionError(f"|V - S|={len(rest)} exceeds 2(floor(n/2)-1)={2 * half}")
    xs = frozenset(rest[:half])
    ys = frozenset(rest[half:])
    colors = _paint(g, lambda u, v: RED if u in xs or v in xs else BLUE)
    certs = (cover(RED, xs), cover(BLUE, ys))
    return EdgeColoring(colors, 2, n, "independent", certs, (("X", xs), ("Y", ys)))
