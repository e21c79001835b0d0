"""Edge colorings, structural certificates, and the coloring file format."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .graph import Graph, ParseError

RED = 1
BLUE = 2

CERT_KINDS = ("cover", "hub", "component", "confine")


class ColoringError(ValueError):
    pass


class CertificateError(ValueError):
    pass


class PreconditionError(ColoringError):
    """A construction's hypotheses do not hold on the given input."""


@dataclass(frozen=True)
class Certificate:
    """A claim about one color class that bounds its longest path.

    cover:     every path in the class has at most ``2|A|+1`` vertices, plus one
               per class edge avoiding ``A`` (``A`` = ``vertices``).
    hub:       as cover, applied to the class minus ``hub``; a path uses at
               most two of the resulting pieces.
    component: every component of the class has fewer than ``n`` vertices.
    confine:   every class edge lies inside one of ``blocks``.
    """

    kind: str
    color: int
    vertices: frozenset[int] = frozenset()
    hub: int | None = None
    blocks: tuple[frozenset[int], ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in CERT_KINDS:
            raise CertificateError(f"unknown certificate kind {self.kind!r}")
        if self.kind == "hub" and self.hub is None:
            raise CertificateError("hub certificate without a hub vertex")
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))

    def lift(self, ids: Sequence[int]) -> Certificate:
        """Rename vertices through a local-to-parent id map."""
        return Certificate(
            self.kind,
            self.color,
            frozenset(ids[v] for v in self.vertices),
            None if self.hub is None else ids[self.hub],
            tuple(frozenset(ids[v] for v in b) for b in self.blocks),
        )

    def recolor(self, color: int) -> Certificate:
        return replace(self, color=color)


def cover(color: int, vertices: Iterable[int]) -> Certificate:
    return Certificate("cover", color, frozenset(vertices))


def confine(color: int, *blocks: Iterable[int]) -> Certificate:
    return Certificate("confine", color, blocks=tuple(frozenset(b) for b in blocks))


@dataclass(frozen=True)
class EdgeColoring:
    """Colors ``1..r`` indexed by the graph's canonical edge order.

    ``n`` is the path order the coloring is meant to avoid: no monochromatic
    path should have ``n`` or more vertices.
    """

    colors: tuple[int, ...]
    r: int
    n: int
    provenance: str = ""
    certificates: tuple[Certificate, ...] = field(default=())
    parts: tuple[tuple[str, frozenset[int]], ...] = field(default=(), repr=False)

    def part(self, name: str) -> frozenset[int]:
        for key, vs in self.parts:
            if key == name:
                return vs
        raise KeyError(name)

    def __len__(self) -> int:
        return len(self.colors)

    def check(self, g: Graph) -> None:
        if len(self.colors) != g.n_edges:
            raise ColoringError(
                f"coloring has {len(self.colors)} entries, graph has {g.n_edges} edges"
            )
        for i, c in enumerate(self.colors):
            if not 1 <= c <= self.r:
                raise ColoringError(f"edge {g.edges[i]} has color {c} outside 1..{self.r}")

    def class_indices(self, color: int) -> list[int]:
        return [i for i, c in enumerate(self.colors) if c == color]


def parse_coloring(text: str | bytes, g: Graph | None = None) -> EdgeColoring:
    """Read ``coloring N M r n`` then ``M`` lines ``u v c`` in canonical edge order."""
    if isinstance(text, bytes):
        text = text.decode()
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or rows[0][0] != "coloring" or len(rows[0]) != 5:
        raise ParseError("expected header 'coloring N M r n'")
    try:
        n_vertices, m, r, n = (int(x) for x in rows[0][1:])
    except ValueError:
        raise ParseError("non-integer coloring header") from None
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}")
    if g is not None and (g.n_vertices != n_vertices or g.n_edges != m):
        raise ColoringError("coloring header does not match graph")
    colors = []
    for i, row in enumerate(body):
        if len(row) != 3:
            raise ParseError(f"bad coloring line {' '.join(row)!r}")
        u, v, c = (int(x) for x in row)
        if g is not None and g.edges[i] != (min(u, v), max(u, v)):
            raise ColoringError(f"line {i + 2} edge ({u}, {v}) is not canonical edge {g.edges[i]}")
        colors.append(c)
    return EdgeColoring(tuple(colors), r, n, provenance="file")


def serialize_coloring(g: Graph, c: EdgeColoring) -> str:
    out = [f"coloring {g.n_vertices} {g.n_edges} {c.r} {c.n}"]
    out.extend(f"{u} {v} {col}" for (u, v), col in zip(g.edges, c.colors))
    return "\n".join(out) + "\n"
