"""The two-color machine: degree reduction, component cases, and the bound curve."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .coloring import BLUE, RED, Certificate, EdgeColoring, PreconditionError, confine, cover
from .colorings import (
    NearThresholdParams,
    color_bfs,
    color_dfs,
    color_few_vertices,
    color_near_threshold,
    color_separator,
)
from .config import Config
from .decomp import star_decompose
from .graph import Graph, components, low_degree_peel
from .partition import PartitionError, PartitionSpec, random_balanced_partition
from .verify import ColoringReport, verify_coloring

GAMMA = Fraction(3, 4)
Inner = Callable[[Graph, int], EdgeColoring]


class ColoringFailure(RuntimeError):
    """Every strategy failed; ``attempts`` says why, ``report`` is the last verification."""

    def __init__(self, message: str, attempts: Sequence[str] = (), report: ColoringReport | None = None):
        super().__init__(message)
        self.attempts = list(attempts)
        self.report = report


# ---------------------------------------------------------------------------
# degree reduction


def _augment(core: Graph, r: int) -> list[tuple[int, int]]:
    adj = [set(a) for a in core.adj]
    comp_of = {}
    comps = components(core)
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    added = []
    for v in range(core.n_vertices):
        need = r + 1 - len(adj[v])
        if need <= 0:
            continue
        own = comps[comp_of[v]]
        others = (w for w in range(core.n_vertices) if comp_of[w] != comp_of[v])
        for w in [*own, *others]:
            if need == 0:
                break
            if w != v and w not in adj[v]:
                adj[v].add(w)
                adj[w].add(v)
                added.append((v, w))
                need -= 1
    return added


def reduce_and_color(g: Graph, n: int, r: int, inner: Inner) -> EdgeColoring:
    """Color vertices of degree at most ``r`` last so they add at most two vertices to any path.

    ``inner(h, n - 2)`` colors each component of the augmented core.
    """
    if n < r + 4:
        raise PreconditionError(f"n={n} < r+4={r + 4}")
    low, core = low_degree_peel(g, r)
    sset = set(low)
    colors = [0] * g.n_edges
    certs: list[Certificate] = []
    tags = []
    if core.n_vertices < n - 2:
        for a, b in core.edges:
            colors[g.index_of(core.ids[a], core.ids[b])] = 1
    else:
        h = Graph(core.n_vertices, core.edges + tuple(_augment(core, r)))
        for comp in components(h):
            sub = h.induced(comp)
            c = inner(sub, n - 2)
            if c.r > r or c.n > n - 2:
                raise PreconditionError("inner strategy broke its contract")
            lift = [core.ids[sub.ids[v]] for v in range(sub.n_vertices)]
            for i, (a, b) in enumerate(sub.edges):
                ga, gb = lift[a], lift[b]
                if g.has_edge(ga, gb):
                    colors[g.index_of(ga, gb)] = c.colors[i]
            certs.extend(ct.lift(lift) for ct in c.certificates if ct.kind in ("cover", "hub"))
            tags.append(c.provenance)

    gs = g.induced(low)
    for j, cls in enumerate(star_decompose(gs).classes):
        for i in cls:
            a, b = gs.edges[i]
            colors[g.index_of(gs.ids[a], gs.ids[b])] = j + 1
    for v in low:
        used = {colors[g.index_of(v, w)] for w in g.adj[v] if w in sset}
        free = [c for c in range(1, r + 1) if c not in used]
        outside = [w for w in g.adj[v] if w not in sset]
        for col, w in zip(free, outside, strict=False):
            colors[g.index_of(v, w)] = col
        if len(outside) > len(free):
            raise AssertionError("low-degree vertex ran out of colors")
    inner_tag = "+".join(sorted(set(tags))) or "trivial"
    return EdgeColoring(tuple(colors), r, n, f"reduce>{inner_tag}", tuple(certs), (("S", frozenset(low)),))


# ---------------------------------------------------------------------------
# component classes


@dataclass(frozen=True)
class Classification:
    n: int
    v0: frozenset[int]
    small: tuple[tuple[int, ...], ...]
    medium: tuple[tuple[int, ...], ...]
    large: tuple[tuple[int, ...], ...]

    @property
    def u(self) -> frozenset[int]:
        return frozenset(v for comp in (*self.medium, *self.large) for v in comp)

    @property
    def early_exit(self) -> bool:
        return not self.large and len(self.medium) <= 1

    def label(self, comp: Sequence[int]) -> str:
        size = len(comp)
        if size < self.n - 2:
            return "small"
        if size <= Fraction(3 * (self.n - 2), 2) - len(self.v0) - 2:
            return "medium"
        return "large"


def high_degree_set(g: Graph, n: int, cfg: Config = Config()) -> frozenset[int]:
    """Vertices of degree above ``n^(1/32)``; outside strict mode only the top ``floor(eps·n/200)``."""
    thr = n ** (1 / 32)
    high = sorted((v for v in range(g.n_vertices) if g.degree(v) > thr), key=lambda v: (-g.degree(v), v))
    if cfg.strict:
        if len(high) > cfg.eps * n / 200:
            raise PreconditionError(f"|V0|={len(high)} > eps·n/200")
        return frozenset(high)
    return frozenset(high[: math.floor(cfg.eps * n / 200)])


def classify_components(g: Graph, n: int, v0: Iterable[int] | None = None, cfg: Config = Config()) -> Classification:
    v0set = high_degree_set(g, n, cfg) if v0 is None else frozenset(v0)
    rest = g.remove_vertices(v0set)
    probe = Classification(n, v0set, (), (), ())
    buckets: dict[str, list[tuple[int, ...]]] = {"small": [], "medium": [], "large": []}
    for comp in components(rest):
        buckets[probe.label(comp)].append(tuple(rest.ids[v] for v in comp))
    return Classification(n, v0set, tuple(buckets["small"]), tuple(buckets["medium"]), tuple(buckets["large"]))


@dataclass(frozen=True)
class CaseParams:
    n: int
    eps: Fraction
    u_size: int
    q: int
    gamma: Fraction = GAMMA

    @property
    def sigma(self) -> Fraction:
        return (self.u_size - (Fraction(3 * (self.n - 2), 2) - 2 - self.q)) / self.n

    @property
    def tau(self) -> Fraction:
        return Fraction(self.u_size, self.n - 3) - 2

    @property
    def case(self) -> str:
        if self.u_size > 2 * (self.n - 3):
            return "2"
        if 0 < self.sigma <= Fraction(1, 6) - self.eps:
            return "1.1"
        if self.sigma > Fraction(1, 6) - self.eps:
            return "1.2"
        return "none"

    @property
    def d(self) -> int:
        raw = math.floor((Fraction(1, 2) - 3 * self.eps) / self.sigma + 1) if self.sigma > 0 else 100
        return max(4, min(raw, 100))


def color_case11(g: Graph, n: int, cls: Classification, cfg: Config = Config()) -> EdgeColoring:
    """Near-threshold coloring on ``U ∪ V0``; ``V0`` to small parts red, small parts blue."""
    u, v0 = cls.u, cls.v0
    params = CaseParams(n, cfg.eps, len(u), len(v0))
    if cfg.strict and params.case != "1.1":
        raise PreconditionError(f"case {params.case} applies, not 1.1")
    sub = g.induced(u | v0)
    local = {v: i for i, v in enumerate(sub.ids)}
    inner = color_near_threshold(
        sub,
        n,
        (local[v] for v in u),
        (local[v] for v in v0),
        NearThresholdParams(cfg.eps, params.d),
        strict=cfg.strict,
    )
    colors = []
    for a, b in g.edges:
        if a in local and b in local:
            colors.append(inner.colors[sub.index_of(local[a], local[b])])
        elif a in v0 or b in v0:
            colors.append(RED)
        else:
            colors.append(BLUE)
    ids = list(sub.ids)
    y = frozenset(ids[v] for v in inner.part("Y"))
    xy = frozenset(ids[v] for v in inner.part("X") | inner.part("Y"))
    z = frozenset(ids[v] for v in inner.part("Z"))
    certs = (cover(RED, y | v0), confine(BLUE, xy | v0, z, *map(frozenset, cls.small)))
    parts = (("X", xy - y), ("Y", y), ("Z", z), ("V0", v0))
    return EdgeColoring(tuple(colors), 2, n - 2, "case1.1", certs, parts)


def color_case12_or_2(g: Graph, n: int, cls: Classification, k: int, cfg: Config = Config()) -> EdgeColoring:
    """Parts of a ``(k+1)``-way split of ``U`` blue inside, red across; ``V0`` red outward."""
    u, v0 = sorted(cls.u), cls.v0
    sub = g.induced(u)
    try:
        spec = PartitionSpec(n, k, sub.n_vertices, cfg.trials, cfg.seed)
    except PartitionError as exc:
        raise PreconditionError(str(exc)) from None
    res = random_balanced_partition(sub, spec, strict=cfg.strict, exhaust=True)
    if not res.caps_ok:
        raise PreconditionError(f"partition of U missed the n-3 size caps after {res.trials} trials")
    if cfg.strict:
        if not res.target_met:
            raise PreconditionError(f"crossing {res.crossing} above target {res.bound}")
        if res.crossing > (1 - cfg.eps / 4) * n:
            raise PreconditionError(f"crossing {res.crossing} > (1 - eps/4)n")
    where = {}
    for i, part in enumerate(res.parts):
        for v in part:
            where[sub.ids[v]] = i
    colors = []
    for a, b in g.edges:
        if a in v0 or b in v0:
            colors.append(BLUE if a in v0 and b in v0 else RED)
        elif a in where and b in where:
            colors.append(BLUE if where[a] == where[b] else RED)
        else:
            colors.append(BLUE)
    blocks = [frozenset(sub.ids[v] for v in part) for part in res.parts]
    certs = (cover(RED, v0), confine(BLUE, *blocks, v0, *map(frozenset, cls.small)))
    parts = tuple((f"U{i + 1}", b) for i, b in enumerate(blocks)) + (("V0", v0),)
    return EdgeColoring(tuple(colors), 2, n - 2, "case1.2" if k == 1 else f"case2(k={k})", certs, parts)


def early_exit_separator(g: Graph, n: int, cls: Classification) -> EdgeColoring:
    """All of ``V0`` plus a prefix of the medium component as a separator."""
    if not cls.early_exit:
        raise PreconditionError("more than one medium or a large component")
    room = (n - 2) // 2 - 1 - len(cls.v0)
    if room < 0:
        raise PreconditionError(f"|V0|={len(cls.v0)} exceeds floor((n-2)/2)-1")
    extra = list(cls.medium[0][:room]) if cls.medium else []
    return color_separator(g, n - 2, set(cls.v0) | set(extra))


def core_ladder(h: Graph, target: int, cfg: Config = Config(), log: list[str] | None = None) -> EdgeColoring:
    """First verified coloring of ``h`` with no monochromatic path of order ``target``."""
    n = target + 2
    log = [] if log is None else log
    cls = classify_components(h, n, cfg=cfg)
    params = CaseParams(n, cfg.eps, len(cls.u), len(cls.v0))
    cases = {
        "1.1": lambda: color_case11(h, n, cls, cfg),
        "1.2": lambda: color_case12_or_2(h, n, cls, 1, cfg),
        "2": lambda: color_case12_or_2(h, n, cls, _k_for(len(cls.u), n), cfg),
    }
    first = [params.case] if params.case in cases else []
    order = [
        ("few-vertices", lambda: color_few_vertices(h, target)),
        ("early-exit", lambda: early_exit_separator(h, n, cls)),
        *((f"case{c}", cases[c]) for c in first),
        *((f"case{c}", cases[c]) for c in ("1.1", "1.2", "2") if c not in first),
    ]
    return _first_verified(h, target, order, cfg, log)


def _k_for(u_size: int, n: int) -> int:
    return max(1, -(-u_size // (n - 3)) - 1)


def _first_verified(g, target, order, cfg: Config, log: list[str]) -> EdgeColoring:
    for name, make in order:
        try:
            c = make()
        except (PreconditionError, PartitionError) as exc:
            log.append(f"{name}: {exc}")
            continue
        rep = verify_coloring(g, c, target, exact_limit=cfg.exact_limit, restarts=cfg.restarts, seed=cfg.seed)
        if rep.safe:
            log.append(f"{name}: verified")
            return c
        log.append(f"{name}: {rep.verdict}")
    raise PreconditionError(f"no strategy colored a graph on {g.n_vertices} vertices")


def _per_component(g: Graph, n: int, strategies: Callable[[Graph], list], cfg: Config, log: list[str]) -> EdgeColoring:
    colors = [1] * g.n_edges
    certs = []
    tags = set()
    for comp in components(g):
        sub = g.induced(comp)
        if not sub.n_edges:
            continue
        c = _first_verified(sub, n, strategies(sub), cfg, log)
        for i, (a, b) in enumerate(sub.edges):
            colors[g.index_of(sub.ids[a], sub.ids[b])] = c.colors[i]
        certs.extend(ct.lift(sub.ids) for ct in c.certificates if ct.kind in ("cover", "hub"))
        tags.add(c.provenance)
    return EdgeColoring(tuple(colors), 2, n, "components>" + "+".join(sorted(tags)), tuple(certs))


def _search_trees(n: int):
    def build(sub: Graph) -> list:
        out = [("component few-vertices", lambda: color_few_vertices(sub, n))]
        roots = sorted(range(sub.n_vertices), key=lambda v: (-sub.degree(v), v))
        out += [(f"bfs@{x}", lambda x=x: color_bfs(sub, n, x)) for x in roots]
        out += [(f"dfs@{x}", lambda x=x: color_dfs(sub, n, x)) for x in roots]
        return out

    return build


def color_two(g: Graph, n: int, cfg: Config = Config()) -> tuple[EdgeColoring, ColoringReport]:
    """Verified 2-coloring with no monochromatic path of order ``n``, or ``ColoringFailure``."""
    if n < 2:
        raise PreconditionError("n must be at least 2")
    log: list[str] = []
    ladder = [("few-vertices", lambda: color_few_vertices(g, n))]
    if n >= 6:
        ladder.append(("reduce", lambda: reduce_and_color(g, n, 2, lambda h, t: core_ladder(h, t, cfg, log))))
    ladder.append(("search-trees", lambda: _per_component(g, n, _search_trees(n), cfg, log)))
    last = None
    for name, make in ladder:
        try:
            c = make()
        except PreconditionError as exc:
            log.append(f"{name}: {exc}")
            continue
        rep = verify_coloring(g, c, n, exact_limit=cfg.exact_limit, restarts=cfg.restarts, seed=cfg.seed)
        last = rep
        if rep.safe:
            rep.notes.extend(log + [f"{name}: verified"])
            return c, rep
        log.append(f"{name}: {rep.verdict}")
    raise ColoringFailure(f"no verified 2-coloring avoiding P_{n}", log, last)


# ---------------------------------------------------------------------------
# the bound curve


def gamma_case12(sigma) -> Fraction:
    return (Fraction(3, 4) + sigma + 3 * sigma**2) / (1 + 2 * sigma)


def gamma_case2(tau) -> Fraction:
    return (1 + tau + Fraction(5, 2) * tau**2) / (1 + 2 * tau)


def case11_coef(c: Fraction, eps: Fraction = Fraction(0)) -> Fraction | None:
    sigma = c - Fraction(3, 2)
    if eps == 0:
        ok = 0 < sigma < Fraction(1, 6)
    else:
        ok = 0 < sigma <= Fraction(1, 6) - eps
    if not ok:
        return None
    d = min(math.floor((Fraction(1, 2) - 3 * eps) / sigma + 1), 100)
    return (3 * (d + 1) + 6 * sigma) / 4 - eps


def case12_coef(c: Fraction, eps: Fraction = Fraction(0)) -> Fraction | None:
    sigma = c - Fraction(3, 2)
    if not 0 < sigma <= Fraction(1, 2):
        return None
    return 3 + gamma_case12(sigma) - eps


def case2_coef(c: Fraction, eps: Fraction = Fraction(0)) -> Fraction | None:
    tau = c - 2
    if not 0 < tau < 1:
        return None
    return 3 + gamma_case2(tau) - eps


@dataclass(frozen=True)
class CurveRow:
    c: Fraction
    case11: Fraction | None
    case12: Fraction | None
    case2: Fraction | None
    envelope: Fraction = field(init=False)

    def __post_init__(self) -> None:
        vals = [v for v in (self.case11, self.case12, self.case2) if v is not None]
        object.__setattr__(self, "envelope", max(vals))


def curve_grid(lo, hi, step) -> list[Fraction]:
    """Grid on the open interval ``(lo, hi)`` with the case breakpoints 5/3 and 2 added."""
    lo, hi, step = Fraction(lo), Fraction(hi), Fraction(step)
    if not Fraction(3, 2) <= lo < hi <= 3:
        raise ValueError(f"grid ({lo}, {hi}) not inside (1.5, 3)")
    if step <= 0:
        raise ValueError("step must be positive")
    pts = set()
    i = 1
    while lo + i * step < hi:
        pts.add(lo + i * step)
        i += 1
    pts.update(b for b in (Fraction(5, 3), Fraction(2)) if lo < b < hi)
    return sorted(pts)


def bound_curve(cs: Iterable, eps=Fraction(0)) -> list[CurveRow]:
    eps = Fraction(eps)
    rows = []
    for c in cs:
        c = Fraction(c)
        if not Fraction(3, 2) < c < 3:
            raise ValueError(f"c={c} outside (1.5, 3)")
        rows.append(CurveRow(c, case11_coef(c, eps), case12_coef(c, eps), case2_coef(c, eps)))
    return rows


def curve_csv(rows: Sequence[CurveRow]) -> str:
    def fmt(x) -> str:
        return "" if x is None else repr(float(x))

    out = ["c,case11,case12,case2,max"]
    out += [",".join(fmt(v) for v in (r.c, r.case11, r.case12, r.case2, r.envelope)) for r in rows]
    return "\n".join(out) + "\n"
