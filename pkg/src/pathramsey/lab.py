"""Instance generators, the exhaustive forcing oracle and the regular-graph probe."""

from __future__ import annotations

import csv
import heapq
import io
import itertools
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .coloring import EdgeColoring, PreconditionError
from .config import Config
from .graph import Graph, GraphError, complete_graph, components, cycle_graph, path_graph, star_graph
from .pipeline import ColoringFailure, color_two
from .verify import verify_coloring

MODELS = ("gnm", "regular", "tree", "grid", "path", "clique", "fixture")
MAX_PAIRING_RESTARTS = 20_000
DEFAULT_BUDGET = 2**20


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


FIXTURES = {
    "c5": lambda: cycle_graph(5),
    "p3": lambda: path_graph(3),
    "k13": lambda: star_graph(3),
    "k4": lambda: complete_graph(4),
    "petersen": _petersen,
    "spider": lambda: Graph(7, ((0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6))),
}


class GenSpecError(GraphError):
    pass


@dataclass(frozen=True)
class GenSpec:
    """``model:key=value,...`` with keys ``N``, ``M``, ``d``, ``seed`` and ``name`` (fixtures)."""

    model: str
    N: int = 0
    M: int = 0
    d: int = 0
    seed: int = 0
    name: str = ""

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise GenSpecError(f"unknown model {self.model!r}; choose from {', '.join(MODELS)}")
        if self.model == "fixture":
            if self.name not in FIXTURES:
                raise GenSpecError(f"unknown fixture {self.name!r}; choose from {', '.join(sorted(FIXTURES))}")
            return
        if self.N < 0 or self.M < 0 or self.d < 0:
            raise GenSpecError("parameters must be non-negative")
        if self.model == "gnm" and self.M > self.N * (self.N - 1) // 2:
            raise GenSpecError(f"M={self.M} exceeds N(N-1)/2={self.N * (self.N - 1) // 2}")
        if self.model == "regular":
            if self.d >= max(self.N, 1) or (self.d * self.N) % 2:
                raise GenSpecError(f"no {self.d}-regular graph on {self.N} vertices (need d < N, dN even)")
        if self.model == "grid" and self.M == 0:
            object.__setattr__(self, "M", self.N)

    @classmethod
    def parse(cls, text: str) -> GenSpec:
        model, _, rest = text.partition(":")
        kw: dict = {}
        for item in filter(None, rest.split(",")):
            key, eq, val = item.partition("=")
            key = key.strip()
            if not eq or key not in ("N", "M", "d", "seed", "name"):
                raise GenSpecError(f"bad generator parameter {item!r}")
            if key == "name":
                kw[key] = val.strip()
                continue
            try:
                kw[key] = int(val)
            except ValueError:
                raise GenSpecError(f"parameter {key} must be an integer, got {val!r}") from None
        return cls(model.strip(), **kw)

    def __str__(self) -> str:
        if self.model == "fixture":
            return f"fixture:name={self.name}"
        return f"{self.model}:N={self.N},M={self.M},d={self.d},seed={self.seed}"


def generate(spec: GenSpec | str) -> Graph:
    if isinstance(spec, str):
        spec = GenSpec.parse(spec)
    rng = np.random.default_rng(spec.seed)
    if spec.model == "fixture":
        return FIXTURES[spec.name]()
    if spec.model == "path":
        return path_graph(spec.N)
    if spec.model == "clique":
        return complete_graph(spec.N)
    if spec.model == "grid":
        return grid_graph(spec.N, spec.M)
    if spec.model == "tree":
        return random_tree(spec.N, rng)
    if spec.model == "gnm":
        return gnm(spec.N, spec.M, rng)
    return random_regular(spec.N, spec.d, rng)


def grid_graph(rows: int, cols: int) -> Graph:
    vid = lambda i, j: i * cols + j  # noqa: E731
    edges = [(vid(i, j), vid(i, j + 1)) for i in range(rows) for j in range(cols - 1)]
    edges += [(vid(i, j), vid(i + 1, j)) for i in range(rows - 1) for j in range(cols)]
    return Graph(rows * cols, tuple(edges))


def random_tree(n_vertices: int, rng: np.random.Generator) -> Graph:
    """Uniform labelled tree from a random Pruefer sequence."""
    if n_vertices <= 2:
        return path_graph(n_vertices)
    seq = rng.integers(n_vertices, size=n_vertices - 2).tolist()
    degree = [1] * n_vertices
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n_vertices) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n_vertices, tuple(edges))


def _pair_of(idx: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    # index of (u, v), u < v, in row-major order of the strict upper triangle
    b = 2 * n - 1
    u = np.floor((b - np.sqrt(b * b - 8.0 * idx)) / 2).astype(np.int64)
    start = u * (b - u) // 2
    over = start > idx
    u[over] -= 1
    start = u * (b - u) // 2
    under = idx - start >= n - 1 - u
    u[under] += 1
    start = u * (b - u) // 2
    return u, u + 1 + (idx - start)


def gnm(n_vertices: int, n_edges: int, rng: np.random.Generator) -> Graph:
    total = n_vertices * (n_vertices - 1) // 2
    if n_edges > total:
        raise GenSpecError(f"M={n_edges} exceeds N(N-1)/2={total}")
    idx = np.sort(rng.choice(total, size=n_edges, replace=False))
    u, v = _pair_of(idx, n_vertices)
    return Graph(n_vertices, tuple(zip(u.tolist(), v.tolist())))


def random_regular(n_vertices: int, d: int, rng: np.random.Generator) -> Graph:
    """Pairing model in rounds: good pairs are kept, leftover stubs are re-paired.

    The attempt restarts from scratch when no valid pair is left among the
    leftovers.  Dense degrees go through the sparser complement.
    """
    if d >= max(n_vertices, 1) or (d * n_vertices) % 2:
        raise GenSpecError(f"no {d}-regular graph on {n_vertices} vertices")
    if d == 0:
        return Graph(n_vertices, ())
    if 2 * d > n_vertices - 1:
        co = random_regular(n_vertices, n_vertices - 1 - d, rng)
        return Graph(n_vertices, tuple(e for e in itertools.combinations(range(n_vertices), 2) if not co.has_edge(*e)))
    for _ in range(MAX_PAIRING_RESTARTS):
        edges = _pairing_attempt(n_vertices, d, rng)
        if edges is not None:
            return Graph(n_vertices, tuple(sorted(edges)))
    raise GenSpecError(f"pairing model found no simple {d}-regular graph in {MAX_PAIRING_RESTARTS} restarts")


def _pairing_attempt(n_vertices: int, d: int, rng: np.random.Generator) -> set | None:
    edges: set[tuple[int, int]] = set()
    stubs = np.repeat(np.arange(n_vertices, dtype=np.int64), d)
    while len(stubs):
        left: list[int] = []
        for a, b in rng.permutation(stubs).reshape(-1, 2).tolist():
            e = (a, b) if a < b else (b, a)
            if a != b and e not in edges:
                edges.add(e)
            else:
                left += (a, b)
        if left and not any(
            (u, v) not in edges for u, v in itertools.combinations(sorted(set(left)), 2)
        ):
            return None
        stubs = np.array(left, dtype=np.int64)
    return edges


# ---------------------------------------------------------------------------
# exhaustive oracle


class OracleBudgetError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    forcing: bool
    witness: EdgeColoring | None
    n_paths: int
    n_colorings: int

    @property
    def exit_code(self) -> int:
        return 1 if self.forcing else 0

    def to_text(self) -> str:
        lines = [f"verdict: {'forcing' if self.forcing else 'colorable'}", f"paths: {self.n_paths}", f"colorings: {self.n_colorings}"]
        if self.witness is not None:
            lines.append("witness: " + " ".join(map(str, self.witness.colors)))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "verdict": "forcing" if self.forcing else "colorable",
            "paths": self.n_paths,
            "colorings": self.n_colorings,
            "witness": None if self.witness is None else list(self.witness.colors),
        }


def paths_of_order(g: Graph, n: int) -> list[tuple[int, ...]]:
    """Edge-index tuples of all simple paths with exactly ``n`` vertices, each listed once."""
    if n < 2 or n > g.n_vertices:
        return []
    out = set()
    stack_path: list[int] = []

    def extend(v: int, on: set[int]) -> None:
        stack_path.append(v)
        if len(stack_path) == n:
            if stack_path[0] < stack_path[-1]:
                out.add(tuple(sorted(g.index_of(a, b) for a, b in zip(stack_path, stack_path[1:]))))
        else:
            for w in g.adj[v]:
                if w not in on:
                    on.add(w)
                    extend(w, on)
                    on.discard(w)
        stack_path.pop()

    for s in range(g.n_vertices):
        extend(s, {s})
    return sorted(out)


def brute_force_forcing(g: Graph, n: int, r: int = 2, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Decide by enumeration whether every ``r``-coloring of ``g`` has a monochromatic ``P_n``.

    Edge 0 is pinned to color 1; the remaining colorings run in lexicographic
    order and the first survivor is returned as the witness.
    """
    if r < 1:
        raise PreconditionError("r must be positive")
    m = g.n_edges
    if r**m > budget:
        raise OracleBudgetError(f"{r}^{m} colorings exceed the budget {budget}")
    if n <= 1:
        return OracleResult(g.n_vertices > 0, None if g.n_vertices else EdgeColoring((), r, n, "oracle"), 0, 0)
    paths = paths_of_order(g, n)
    if m == 0:
        return OracleResult(bool(paths), None if paths else EdgeColoring((), r, n, "oracle"), len(paths), 1)
    free = m - 1
    count = r**free
    codes = np.arange(count, dtype=np.int64)
    table = np.zeros((count, m), dtype=np.uint8)
    for j in range(free, 0, -1):
        codes, table[:, j] = np.divmod(codes, r)
    alive = table
    for p in paths:
        cols = alive[:, list(p)]
        mono = (cols == cols[:, :1]).all(axis=1)
        alive = alive[~mono]
        if not len(alive):
            return OracleResult(True, None, len(paths), count)
    witness = EdgeColoring(tuple(int(x) + 1 for x in alive[0]), r, n, "oracle")
    return OracleResult(False, witness, len(paths), count)


# ---------------------------------------------------------------------------
# greedy helpers for the set-driven colorings


def greedy_independent_set(g: Graph) -> list[int]:
    """Minimum-degree greedy independent set."""
    alive = set(range(g.n_vertices))
    deg = {v: g.degree(v) for v in alive}
    out = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        out.append(v)
        gone = {v, *(w for w in g.adj[v] if w in alive)}
        alive -= gone
        for u in gone:
            for w in g.adj[u]:
                if w in alive:
                    deg[w] -= 1
    return sorted(out)


def greedy_separator(g: Graph, n: int, limit: int | None = None) -> list[int] | None:
    """Delete top-degree vertices of the largest component until every component has fewer than ``n`` vertices."""
    limit = n // 2 - 1 if limit is None else limit
    removed: list[int] = []
    while True:
        h = g.remove_vertices(removed)
        comps = components(h)
        if not comps or len(comps[0]) < n:
            return sorted(removed)
        if len(removed) >= limit:
            return None
        big = comps[0]
        v = max(big, key=lambda x: (h.degree(x), -x))
        removed.append(h.ids[v] if h.ids is not None else v)


# ---------------------------------------------------------------------------
# regular-graph probe

PROBE_HEADER = ("d", "N", "sample", "seed", "n_min", "ratio", "strategy", "reverified")
DEFAULT_FACTORS = (2, 3, 4, 6, 8)


@dataclass
class ProbeRow:
    d: int
    N: int
    sample: int
    seed: int
    n_min: int | None
    strategy: str = ""
    reverified: str = ""

    @property
    def ratio(self) -> float | None:
        return None if self.n_min is None else self.N / self.n_min

    def as_tuple(self) -> tuple:
        if self.n_min is None:
            return (self.d, self.N, self.sample, self.seed, "", "", self.strategy, self.reverified)
        return (self.d, self.N, self.sample, self.seed, self.n_min, f"{self.ratio:.6f}", self.strategy, self.reverified)


@dataclass
class ProbeTable:
    rows: list[ProbeRow] = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(PROBE_HEADER)
        w.writerows(r.as_tuple() for r in self.rows)
        return buf.getvalue()


def _attempt(g: Graph, n: int, cfg: Config):
    try:
        c, rep = color_two(g, n, cfg)
    except (ColoringFailure, PreconditionError):
        return None
    return c, rep


def smallest_colorable_order(g: Graph, cfg: Config, lo: int = 2) -> tuple[int, EdgeColoring, str] | None:
    """Binary search for the least ``n`` at which the strategy ladder finds a verified coloring."""
    hi = g.n_vertices + 1
    best = _attempt(g, hi, cfg)
    if best is None:
        return None
    best_n = hi
    while lo < hi:
        mid = (lo + hi) // 2
        got = _attempt(g, mid, cfg)
        if got is None:
            lo = mid + 1
        else:
            hi, best, best_n = mid, got, mid
    c, rep = best
    strategy = rep.notes[-1].split(":")[0] if rep.notes else c.provenance
    return best_n, c, strategy


def probe_regular(
    d: int, n: int, samples: int, cfg: Config = Config(), factors: Iterable[int] = DEFAULT_FACTORS
) -> ProbeTable:
    """For ``N = f*n`` (rounded up to make ``dN`` even) record the least avoidable path order."""
    if d < 3:
        raise PreconditionError(f"d={d} below 3")
    table = ProbeTable()
    for f in factors:
        size = f * n + ((f * n * d) % 2)
        if d >= size:
            continue
        for s in range(samples):
            seed = cfg.seed * 1_000_003 + size * 101 + s
            g = random_regular(size, d, np.random.default_rng(seed))
            found = smallest_colorable_order(g, cfg)
            if found is None:
                table.rows.append(ProbeRow(d, size, s, seed, None))
                continue
            n_min, c, strategy = found
            rep = verify_coloring(g, c, n_min, exact_limit=cfg.exact_limit, restarts=cfg.restarts, seed=cfg.seed)
            table.rows.append(ProbeRow(d, size, s, seed, n_min, strategy, rep.verdict))
    return table
