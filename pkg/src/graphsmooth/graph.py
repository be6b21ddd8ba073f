"""Simple undirected graphs, edge-list I/O, Laplacians and exact cut arithmetic.

Vertices are the integers ``0..n-1``.  Vertex sets are passed around either as
iterables of vertices or as integer bitmasks (bit ``v`` set iff ``v`` is a
member); Python integers are unbounded so the mask form works for any ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "Cut",
    "GraphFormatError",
    "parse_edge_list",
    "read_edge_list",
    "render_edge_list",
    "write_edge_list",
    "laplacian",
    "is_connected",
    "induced_connected",
    "cut",
    "degree_stats",
    "to_mask",
    "from_mask",
]


class GraphFormatError(ValueError):
    """Raised for malformed edge-list input; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Edges are normalised to ``(min, max)`` and kept sorted.  Construction
    rejects self-loops, duplicates and out-of-range endpoints.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    adj_masks: tuple[int, ...] = field(repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        es = tuple(sorted(seen))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in es:
            nbrs[u].append(v)
            nbrs[v].append(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))
        object.__setattr__(self, "adj_masks", tuple(masks))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and bool(self.adj_masks[u] >> v & 1)

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges + ((u, v),))


@dataclass(frozen=True)
class Cut:
    """The cut ``delta(S)`` with its exact relative sizes and density."""

    S: frozenset[int]
    n: int
    boundary_size: int
    xi_S: Fraction
    xi_comp: Fraction
    rho: Fraction

    @property
    def complement(self) -> frozenset[int]:
        return frozenset(range(self.n)) - self.S

    @property
    def mask(self) -> int:
        return to_mask(self.S)


def to_mask(S: Iterable[int] | int) -> int:
    if isinstance(S, (int, np.integer)):
        return int(S)
    mask = 0
    for v in S:
        mask |= 1 << int(v)
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def _strip(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: a vertex count line, then ``u v`` lines.

    Blank lines and lines starting with ``#`` are ignored.
    """
    lines = _strip(text)
    try:
        lineno, first = next(lines)
    except StopIteration:
        raise GraphFormatError("missing vertex count") from None
    try:
        n = int(first)
    except ValueError:
        raise GraphFormatError(f"expected vertex count, got {first!r}", lineno) from None
    if n < 0:
        raise GraphFormatError("vertex count must be non-negative", lineno)

    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {line!r}", lineno) from None
        for w in (u, v):
            if not 0 <= w < n:
                raise GraphFormatError(f"vertex {w} out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphFormatError(f"duplicate edge {e[0]} {e[1]}", lineno)
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def render_edge_list(G: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(G.n))
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(G: Graph, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_edge_list(G, comment))


def laplacian(G: Graph) -> np.ndarray:
    """Integer Laplacian ``D - A``."""
    L = np.zeros((G.n, G.n), dtype=np.int64)
    for u, v in G.edges:
        L[u, v] = L[v, u] = -1
        L[u, u] += 1
        L[v, v] += 1
    return L


def _reach(mask: int, adj_masks: Sequence[int]) -> int:
    # flood fill inside ``mask`` from its lowest vertex
    seen = frontier = mask & -mask
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj_masks[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen


def _mask_connected(mask: int, adj_masks: Sequence[int]) -> bool:
    return mask != 0 and _reach(mask, adj_masks) == mask


def is_connected(G: Graph) -> bool:
    """True for connected graphs; the empty graph counts as disconnected."""
    if G.n == 0:
        return False
    return _mask_connected((1 << G.n) - 1, G.adj_masks)


def induced_connected(G: Graph, S: Iterable[int] | int) -> bool:
    mask = to_mask(S)
    if mask == 0:
        raise ValueError("vertex set must be nonempty")
    if mask >> G.n:
        raise ValueError("vertex set exceeds the graph's vertex range")
    return _mask_connected(mask, G.adj_masks)


def boundary_size(G: Graph, S: Iterable[int] | int) -> int:
    mask = to_mask(S)
    return sum(1 for u, v in G.edges if (mask >> u & 1) != (mask >> v & 1))


def cut(G: Graph, S: Iterable[int] | int) -> Cut:
    mask = to_mask(S)
    full = (1 << G.n) - 1
    if mask == 0 or mask == full:
        raise ValueError("S must be a nonempty proper subset of V")
    if mask & ~full:
        raise ValueError("S exceeds the graph's vertex range")
    s = mask.bit_count()
    d = boundary_size(G, mask)
    return Cut(
        S=from_mask(mask),
        n=G.n,
        boundary_size=d,
        xi_S=Fraction(d, s),
        xi_comp=Fraction(d, G.n - s),
        rho=Fraction(d, s * (G.n - s)),
    )


def degree_stats(G: Graph) -> tuple[int, int, list[int]]:
    degs = G.degrees
    if not degs:
        raise ValueError("graph has no vertices")
    return min(degs), max(degs), degs
