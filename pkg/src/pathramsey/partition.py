"""Seeded Monte-Carlo ``(k+1)``-way partition with few crossing edges.

Connected chunks of order about ``sqrt(N)`` are dropped into parts ``1..k``
with probability ``alpha1`` each and into part ``k+1`` with ``alpha2``; low
degree vertices are then moved until every part has at most ``n-3``
vertices.  Trials are resampled until the crossing target holds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .decomp import chunk_components
from .graph import Graph, GraphError, components

DEFAULT_TRIALS = 200


class PartitionError(GraphError):
    pass


@dataclass(frozen=True)
class PartitionSpec:
    n: int
    k: int
    n_vertices: int
    trials: int = DEFAULT_TRIALS
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 4:
            raise PartitionError(f"n={self.n} below 4")
        m = self.n - 3
        if self.k < 1 or not self.k * m < self.n_vertices <= (self.k + 1) * m:
            raise PartitionError(
                f"k={self.k} out of range: need k(n-3) < N <= (k+1)(n-3) with N={self.n_vertices}"
            )
        if self.trials < 1:
            raise PartitionError("trial budget must be positive")

    @classmethod
    def for_graph(cls, g: Graph, n: int, k: int | None = None, trials: int = DEFAULT_TRIALS, seed: int = 0) -> PartitionSpec:
        if k is None:
            k = max(1, -(-g.n_vertices // max(n - 3, 1)) - 1)
        return cls(n, k, g.n_vertices, trials, seed)

    @property
    def alpha1(self) -> Fraction:
        return Fraction(self.n - 3, self.n_vertices)

    @property
    def alpha2(self) -> Fraction:
        return Fraction(self.n_vertices - self.k * (self.n - 3), self.n_vertices)

    @property
    def low_degree(self) -> int:
        return 800 * self.k**3

    def crossing_bound(self, n_edges: int) -> int:
        coef = 1 - self.k * self.alpha1**2 - self.alpha2**2
        return math.ceil(float(coef * (n_edges - self.n_vertices)) + self.n_vertices ** (15 / 16))


@dataclass(frozen=True)
class PartitionResult:
    parts: tuple[frozenset[int], ...]
    crossing: int
    trials: int
    target_met: bool
    caps_ok: bool
    bound: int
    moved: frozenset[int] = frozenset()
    warnings: tuple[str, ...] = field(default=())

    def labels(self, n_vertices: int) -> list[int]:
        out = [-1] * n_vertices
        for i, part in enumerate(self.parts):
            for v in part:
                out[v] = i
        return out


def count_crossing(g: Graph, parts) -> int:
    """Edges whose endpoints lie in different parts (plain edge scan)."""
    where = {}
    for i, part in enumerate(parts):
        for v in part:
            where[v] = i
    return sum(1 for u, v in g.edges if where[u] != where[v])


def partition_warnings(g: Graph, spec: PartitionSpec) -> list[str]:
    out = []
    big_n = g.n_vertices
    if big_n < spec.n - 2:
        out.append(f"N={big_n} < n-2")
    if g.max_degree > big_n ** (1 / 16):
        out.append(f"max degree {g.max_degree} > N^(1/16)={big_n ** (1 / 16):.3f}")
    if g.n_edges > 100 * big_n:
        out.append(f"|E|={g.n_edges} > 100N")
    if spec.k > spec.n ** (1 / 64):
        out.append(f"k={spec.k} > n^(1/64)")
    small = [c for c in components(g) if len(c) < spec.n - 2]
    if small:
        out.append(f"component of {len(small[-1])} vertices < n-2")
    return out


def random_balanced_partition(
    g: Graph, spec: PartitionSpec, strict: bool = False, exhaust: bool = False
) -> PartitionResult:
    """Best of up to ``spec.trials`` seeded trials.

    Stops at the first trial that meets the target unless ``exhaust`` is set,
    in which case every trial runs and the fewest crossings win.
    """
    if spec.n_vertices != g.n_vertices:
        raise PartitionError("PartitionSpec was built for a different vertex count")
    warnings = partition_warnings(g, spec)
    if strict and warnings:
        raise PartitionError("; ".join(warnings))
    big_n, k, cap = g.n_vertices, spec.k, spec.n - 3
    chunks = chunk_components(g, math.isqrt(big_n))
    chunk_of = np.empty(big_n, dtype=np.int64)
    for i, ch in enumerate(chunks):
        chunk_of[list(ch)] = i
    eu = np.fromiter((u for u, _ in g.edges), dtype=np.int64, count=g.n_edges)
    ev = np.fromiter((v for _, v in g.edges), dtype=np.int64, count=g.n_edges)
    deg = np.asarray(g.degrees, dtype=np.int64)
    order = sorted(range(big_n), key=lambda v: (deg[v], v))
    movable = [v for v in order if deg[v] <= spec.low_degree]
    probs = np.array([float(spec.alpha1)] * k + [float(spec.alpha2)])
    probs /= probs.sum()
    bound = spec.crossing_bound(g.n_edges)

    best = None
    for trial in range(spec.trials):
        rng = np.random.default_rng([spec.seed, trial])
        label = rng.choice(k + 1, size=len(chunks), p=probs)[chunk_of]
        moved = _rebalance(label, movable, spec)
        sizes = np.bincount(label, minlength=k + 1)
        caps_ok = bool((sizes <= cap).all())
        crossing = int((label[eu] != label[ev]).sum())
        met = caps_ok and crossing <= bound
        key = (not caps_ok, crossing, trial)
        if best is None or key < best[0]:
            best = (key, label.copy(), moved, met)
        if met and not exhaust:
            break
    (caps_bad, crossing, _), label, moved, met = best
    parts = tuple(frozenset(np.flatnonzero(label == i).tolist()) for i in range(k + 1))
    return PartitionResult(
        parts, crossing, trial + 1, met, not caps_bad, bound, frozenset(moved), tuple(warnings)
    )


def _rebalance(label: np.ndarray, movable: list[int], spec: PartitionSpec) -> list[int]:
    """Move low-degree vertices out of oversized parts, in place."""
    k, cap, big_n = spec.k, spec.n - 3, spec.n_vertices
    sizes = np.bincount(label, minlength=k + 1)
    if sizes[:k].max() <= cap and sizes[k] <= cap:
        return []
    if sizes[k] < big_n / (2 * k**3):
        target = [cap] * (k + 1)
        dests = [k, *range(k)]
    else:
        target = [cap] * k + [big_n - k * cap]
        dests = list(range(k + 1))
    moved = []
    pools = {i: [v for v in movable if label[v] == i] for i in range(k + 1)}
    for i in range(k + 1):
        pool = pools[i]
        j_pos = 0
        while sizes[i] > target[i] and j_pos < len(pool):
            dest = next((j for j in dests if sizes[j] < target[j]), None)
            if dest is None:
                break
            v = pool[j_pos]
            j_pos += 1
            label[v] = dest
            sizes[i] -= 1
            sizes[dest] += 1
            moved.append(v)
    return moved
