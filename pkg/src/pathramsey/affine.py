"""Finite fields, affine planes, and the r-color pipelines."""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .coloring import EdgeColoring, PreconditionError, cover
from .colorings import color_few_vertices_r
from .config import Config
from .decomp import prune_long_paths
from .graph import Graph, components, spanning_forest
from .pipeline import ColoringFailure, color_two
from .verify import ColoringReport, verify_coloring


class FieldError(ValueError):
    pass


# ---------------------------------------------------------------------------
# prime powers and fields


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, k)`` with ``q = p**k`` and ``p`` prime, or ``None``."""
    if q < 2:
        return None
    p = next(d for d in itertools.count(2) if q % d == 0 or d * d > q)
    if q % p:
        p = q
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


def largest_prime_power_le(x: int) -> int:
    if x < 2:
        raise FieldError(f"x={x} below 2")
    return next(q for q in range(x, 1, -1) if prime_power(q))


def _digits(a: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _poly_mod(coeffs: list[int], mod: list[int], p: int) -> list[int]:
    """Remainder of ``coeffs`` by the monic ``mod`` (lists, constant term first)."""
    c = list(coeffs)
    deg = len(mod) - 1
    for i in range(len(c) - 1, deg - 1, -1):
        lead = c[i] % p
        if lead:
            for j in range(deg + 1):
                c[i - deg + j] = (c[i - deg + j] - lead * mod[j]) % p
    return [x % p for x in c[:deg]] + [0] * max(0, deg - len(c))


def _has_factor(f: list[int], p: int) -> bool:
    k = len(f) - 1
    for dg in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=dg):
            div = list(low) + [1]
            if not any(_poly_mod(f, div, p)):
                return True
    return False


def lowest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically lowest monic irreducible of degree ``k`` over ``GF(p)``, constant term first."""
    for code in range(p**k):
        f = _digits(code, p, k) + [1]
        if not _has_factor(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


@dataclass(frozen=True, eq=False)
class FiniteField:
    """``GF(p^k)``; element ``a`` stands for the polynomial with base-``p`` digits of ``a``."""

    p: int
    k: int
    modulus: tuple[int, ...]
    add: np.ndarray = field(repr=False)
    mul: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.k

    @cached_property
    def neg(self) -> np.ndarray:
        return np.argmin(self.add, axis=1)

    @cached_property
    def inv(self) -> np.ndarray:
        out = np.zeros(self.q, dtype=np.int64)
        out[1:] = np.argmax(self.mul[1:] == 1, axis=1)
        return out


def build_field(q: int) -> FiniteField:
    pk = prime_power(q)
    if pk is None:
        raise FieldError(f"q={q} is not a prime power")
    p, k = pk
    if k == 1:
        a = np.arange(p)
        return FiniteField(p, 1, (0, 1), (a[:, None] + a) % p, (a[:, None] * a) % p)
    mod = list(lowest_irreducible(p, k))
    digs = [_digits(a, p, k) for a in range(q)]
    weights = [p**i for i in range(k)]

    def enc(cs) -> int:
        return sum(c * w for c, w in zip(cs, weights))

    add = np.array([[enc([(x + y) % p for x, y in zip(da, db)]) for db in digs] for da in digs])
    mul = np.zeros((q, q), dtype=np.int64)
    for a, da in enumerate(digs):
        for b, db in enumerate(digs):
            prod = [0] * (2 * k - 1)
            for i, x in enumerate(da):
                if x:
                    for j, y in enumerate(db):
                        prod[i + j] += x * y
            mul[a, b] = enc(_poly_mod(prod, mod, p))
    return FiniteField(p, k, tuple(mod), add, mul)


# ---------------------------------------------------------------------------
# affine planes


@dataclass(frozen=True, eq=False)
class AffinePlane:
    """Points ``x·q + y``; class ``m < q`` holds the lines ``y = m·x + b``, class ``q`` the verticals."""

    field: FiniteField
    lines: tuple[tuple[int, ...], ...]
    line_class: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.field.q

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(i for i, c in enumerate(self.line_class) if c == m) for m in range(self.q + 1))

    @cached_property
    def line_through(self) -> np.ndarray:
        """``[a, b]`` is the line holding points ``a != b``; ``-1`` on the diagonal."""
        q2 = self.q * self.q
        out = -np.ones((q2, q2), dtype=np.int64)
        for i, line in enumerate(self.lines):
            idx = np.array(line)
            out[np.ix_(idx, idx)] = i
        np.fill_diagonal(out, -1)
        return out

    def lines_at(self, point: int) -> list[int]:
        """The ``q+1`` lines through ``point``, indexed by class."""
        out = [-1] * (self.q + 1)
        for i, line in enumerate(self.lines):
            if point in line:
                out[self.line_class[i]] = i
        return out


def build_affine_plane(f: FiniteField) -> AffinePlane:
    q = f.q
    lines, cls = [], []
    for m in range(q):
        for b in range(q):
            lines.append(tuple(sorted(x * q + int(f.add[f.mul[m, x], b]) for x in range(q))))
            cls.append(m)
    for c in range(q):
        lines.append(tuple(c * q + y for y in range(q)))
        cls.append(q)
    return AffinePlane(f, tuple(lines), tuple(cls))


def dump_plane(plane: AffinePlane) -> str:
    out = [f"plane {plane.q}"]
    for line, m in zip(plane.lines, plane.line_class):
        out.append(f"class {m}: " + " ".join(map(str, line)))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# r colors


HUB = 0


def affine_high_degree(g: Graph, n: int, q: int, cfg: Config) -> list[frozenset[int]]:
    """Candidate high-degree sets, tried in order: empty first outside strict mode."""
    full = frozenset(v for v in range(g.n_vertices) if g.degree(v) >= n**0.1)
    if cfg.strict:
        return [full]
    return [frozenset(), full] if full else [frozenset()]


def _split(g: Graph, n: int, v0: frozenset[int], plane: AffinePlane, point_lines, cfg: Config):
    """Labels ``0..q^2-1`` (``-1`` on ``V0``) with every line under capacity, or ``None``."""
    q = plane.q
    hub_cap = n - 2 * len(v0) - 1
    if hub_cap <= 0:
        return None
    caps = np.array([hub_cap if HUB in line else n - 1 for line in plane.lines])
    rest = np.array([v for v in range(g.n_vertices) if v not in v0], dtype=np.int64)
    inner = [(a, b) for a, b in g.edges if a not in v0 and b not in v0]
    eu = np.array([a for a, _ in inner], dtype=np.int64)
    ev = np.array([b for _, b in inner], dtype=np.int64)
    through = plane.line_through
    for trial in range(cfg.trials):
        rng = np.random.default_rng([cfg.seed, trial])
        lab = np.full(g.n_vertices, -1, dtype=np.int64)
        lab[rest] = rng.integers(q * q, size=len(rest))
        if (_line_loads(lab, eu, ev, through, point_lines, len(plane.lines)) < caps).all():
            return lab
    return None


def color_r_affine(g: Graph, n: int, r: int, cfg: Config = Config()) -> EdgeColoring:
    """Color by parallel classes of ``AG(2, q)`` after a random split into ``q^2`` parts.

    A part pair ``x != y`` takes the class of the line through ``x, y``;
    edges inside a part take color 1.  High-degree vertices send color ``i``
    into the line of class ``i`` through the hub point.
    """
    if r < 3:
        raise PreconditionError(f"r={r} below 3")
    q = largest_prime_power_le(r - 1)
    plane = build_affine_plane(build_field(q))
    budget = q * q * n - 6 * q**4 * n**0.9
    if g.n_edges > budget:
        msg = f"|E|={g.n_edges} > q^2 n - 6 q^4 n^0.9 = {budget:.1f}"
        if cfg.strict:
            raise PreconditionError(msg)
        warnings.warn(msg, stacklevel=2)
    point_lines = np.array([plane.lines_at(x) for x in range(q * q)])
    found = None
    for v0 in affine_high_degree(g, n, q, cfg):
        label = _split(g, n, v0, plane, point_lines, cfg)
        if label is not None:
            found = (v0, label)
            break
    if found is None:
        raise PreconditionError(f"no split met the line capacities in {cfg.trials} trials")
    v0, label = found
    through = plane.line_through

    colors = []
    for a, b in g.edges:
        if a in v0 and b in v0:
            colors.append(1)
        elif a in v0 or b in v0:
            y = label[b if a in v0 else a]
            colors.append(1 if y == HUB else plane.line_class[through[HUB, y]] + 1)
        elif label[a] == label[b]:
            colors.append(1)
        else:
            colors.append(plane.line_class[through[label[a], label[b]]] + 1)
    certs = tuple(cover(i, v0) for i in range(1, q + 2))
    parts = tuple((f"V{x}", frozenset(np.flatnonzero(label == x).tolist())) for x in range(q * q))
    return EdgeColoring(tuple(colors), r, n, f"affine(q={q})", certs, (("V0", v0), *parts))


def _line_loads(lab, eu, ev, through, point_lines, n_lines) -> np.ndarray:
    """Edges inside each line's union of parts; an edge within one part counts for every line through it."""
    pu, pv = lab[eu], lab[ev]
    same = pu == pv
    loads = np.bincount(through[pu[~same], pv[~same]], minlength=n_lines)
    if same.any():
        loads += np.bincount(point_lines[pu[same]].ravel(), minlength=n_lines)
    return loads


def few_vertices_capacity(n: int, r: int) -> int:
    return (2 * r - 2) * (n // 2 - 1)


def color_r_inductive(g: Graph, n: int, r: int, cfg: Config = Config()) -> EdgeColoring:
    """Peel one pruned spanning forest per color, then finish with two colors.

    A graph that fits ``2r-2`` blocks of ``floor(n/2)-1`` vertices is colored
    directly.  Otherwise the pruned spanning forest takes color ``r`` and the
    remaining edges recurse with ``r-1`` colors.
    """
    if r < 2:
        raise PreconditionError(f"r={r} below 2")
    if r == 2:
        try:
            return color_two(g, n, cfg)[0]
        except ColoringFailure as exc:
            raise PreconditionError(f"two-color stage failed: {exc}") from None
    if g.n_vertices <= few_vertices_capacity(n, r):
        return color_few_vertices_r(g, n, r)
    forest = spanning_forest(g)
    fgraph = g.edge_subgraph(forest)
    # trees below n//2 vertices already avoid P_n and are kept whole
    tall = {v for comp in components(fgraph) if len(comp) >= n // 2 for v in comp}
    tree = fgraph.induced(tall)
    _, pruned = prune_long_paths(tree, n)
    keep = {(tree.ids[a], tree.ids[b]) for a, b in pruned.edges}
    keep.update(g.edges[i] for i in forest if g.edges[i][0] not in tall)
    colors = [r] * g.n_edges
    rest = [i for i, e in enumerate(g.edges) if e not in keep]
    sub = g.edge_subgraph(rest)
    c = color_r_inductive(sub, n, r - 1, cfg)
    for i, col in zip(rest, c.colors):
        colors[i] = col
    certs = tuple(ct for ct in c.certificates if ct.kind in ("cover", "hub"))
    return EdgeColoring(tuple(colors), r, n, f"inductive(r={r})", certs)


def color_r(g: Graph, n: int, r: int, cfg: Config = Config()) -> tuple[EdgeColoring, ColoringReport]:
    """Affine plane first when ``r >= 4``, the forest induction first otherwise; always verified."""
    if r < 2:
        raise PreconditionError(f"r={r} below 2")
    if r == 2:
        return color_two(g, n, cfg)
    order = [("affine", color_r_affine), ("inductive", color_r_inductive)]
    if r == 3:
        order.reverse()
    log, last = [], None
    for name, fn in order:
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                c = fn(g, n, r, cfg)
        except PreconditionError as exc:
            log.append(f"{name}: {exc}")
            continue
        rep = verify_coloring(g, c, n, exact_limit=cfg.exact_limit, restarts=cfg.restarts, seed=cfg.seed)
        last = rep
        if rep.safe:
            rep.notes.extend(log + [f"{name}: verified"])
            return c, rep
        log.append(f"{name}: {rep.verdict}")
    raise ColoringFailure(f"no verified {r}-coloring avoiding P_{n}", log, last)
