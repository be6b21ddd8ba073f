"""Trees (center edges, exact b in linear time), named graph families and
random generators.

Labeling conventions used by :func:`generate`:

* path / cycle: consecutive labels ``0..n-1``;
* star: center 0, leaves ``1..n-1``;
* wheel: ``n`` vertices in total, center 0 and rim cycle ``1..n-1``;
* cube: the 3-dimensional hypercube, vertices adjacent iff their labels
  differ in one bit;
* broom ``B(ell, n-ell)``: path ``0..ell-1``, leaves ``ell..n-1`` on ``ell-1``;
* starlike ``S(n_1, ..., n_k)``: hub 0, then each star in argument order,
  center first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, is_connected

FAMILIES = ("path", "cycle", "star", "complete", "wheel", "cube", "broom", "starlike")


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.m == G.n - 1 and is_connected(G)


@dataclass(frozen=True)
class CenterEdgeResult:
    center_edges: list[tuple[int, int]]
    delta: int
    component_sizes: dict[tuple[int, int], tuple[int, int]]
    b: Fraction


def center_edges(T: Graph) -> CenterEdgeResult:
    """Edges whose removal splits the tree most evenly.

    ``component_sizes[(u, v)]`` is ``(|V_u|, |V_v|)`` for the edge ``u < v``,
    the sizes of the components containing ``u`` and ``v`` after removal.
    """
    if T.n < 2 or not is_tree(T):
        raise ValueError("center edges are defined for trees with at least two vertices")
    n = T.n
    parent = [-1] * n
    order = []
    stack = [0]
    seen = [False] * n
    seen[0] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for w in T.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                stack.append(w)
    sub = [1] * n
    for u in reversed(order):
        if parent[u] >= 0:
            sub[parent[u]] += sub[u]

    sizes = {}
    for child in range(1, n):
        p = parent[child]
        s = sub[child]
        sizes[(min(p, child), max(p, child))] = (n - s, s) if p < child else (s, n - s)
    delta = min(abs(a - b) for a, b in sizes.values())
    centers = sorted(e for e, (a, b) in sizes.items() if abs(a - b) == delta)
    a, b = sizes[centers[0]]
    return CenterEdgeResult(
        center_edges=centers,
        delta=delta,
        component_sizes=dict(sorted(sizes.items())),
        b=Fraction(1, 2) * (Fraction(1, a) + Fraction(1, b)),
    )


def b_tree(T: Graph) -> Fraction:
    return center_edges(T).b


def substar_check(T: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    """True iff the given tree edges all share one common vertex."""
    es = [(min(u, v), max(u, v)) for u, v in edges]
    for u, v in es:
        if not T.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the tree")
    if len(es) <= 1:
        return True
    common = set(es[0])
    for e in es[1:]:
        common &= set(e)
    return bool(common)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int | None = None
    ell: int | None = None
    parts: tuple[int, ...] | None = None

    def __post_init__(self):
        f = self.family
        if f not in FAMILIES:
            raise ValueError(f"unknown family {f!r}; choose from {', '.join(FAMILIES)}")
        if f == "cube":
            if self.n not in (None, 8):
                raise ValueError("the cube graph has exactly 8 vertices")
            object.__setattr__(self, "n", 8)
            return
        if f == "starlike":
            if not self.parts or len(self.parts) < 2 or min(self.parts) < 1:
                raise ValueError("starlike needs at least two parts, each >= 1")
            object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
            total = sum(self.parts) + 1
            if self.n not in (None, total):
                raise ValueError(f"starlike {self.parts} has {total} vertices, not {self.n}")
            object.__setattr__(self, "n", total)
            return
        if self.n is None:
            raise ValueError(f"family {f} needs n")
        minimum = {"path": 2, "cycle": 3, "star": 2, "complete": 2, "wheel": 4, "broom": 3}[f]
        if self.n < minimum:
            raise ValueError(f"family {f} needs n >= {minimum}")
        if f == "broom":
            if self.ell is None or self.ell < 2 or self.ell >= self.n:
                raise ValueError("broom needs 2 <= ell < n")

    @property
    def vertex_count(self) -> int:
        return self.n


def generate(spec: FamilySpec) -> Graph:
    f, n = spec.family, spec.n
    if f == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif f == "cycle":
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif f == "star":
        edges = [(0, i) for i in range(1, n)]
    elif f == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif f == "wheel":
        rim = n - 1
        edges = [(0, i) for i in range(1, n)] + [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    elif f == "cube":
        edges = [(i, i ^ (1 << k)) for i in range(8) for k in range(3) if i < i ^ (1 << k)]
    elif f == "broom":
        ell = spec.ell
        edges = [(i, i + 1) for i in range(ell - 1)] + [(ell - 1, j) for j in range(ell, n)]
    else:
        edges = []
        nxt = 1
        for size in spec.parts:
            center = nxt
            edges.append((0, center))
            edges.extend((center, center + i) for i in range(1, size))
            nxt += size
    return Graph(n, edges)


def closed_form_b(spec: FamilySpec) -> Fraction:
    """Known exact value of b for every supported family."""
    f, n = spec.family, spec.n
    if f == "path":
        return Fraction(2, n) if n % 2 == 0 else Fraction(2 * n, n * n - 1)
    if f == "cycle":
        return Fraction(4, n) if n % 2 == 0 else Fraction(n, (n // 2) * ((n + 1) // 2))
    if f == "star":
        return Fraction(1, 2) + Fraction(1, 2 * (n - 1))
    if f == "complete":
        return Fraction(n, 2)
    if f == "wheel":
        return wheel_b(n)
    if f == "cube":
        return Fraction(1)
    if f == "broom":
        ell = spec.ell
        if 2 * ell <= n:
            return Fraction(n, 2 * (ell - 1) * (n - ell + 1))
        if n % 2 == 0:
            return Fraction(2, n)
        return Fraction(2 * n, n * n - 1)
    n_max = max(spec.parts)
    return Fraction(n, 2 * n_max * (n - n_max))


def wheel_b(n: int) -> Fraction:
    """Exact b of the wheel on n vertices.

    A cut with both sides connected either isolates the hub (density 1) or
    removes an arc of k consecutive rim vertices (k spokes plus 2 rim edges),
    density (k+2)/(k(n-k)).  The arc with k = 2 gives n/(n-2), which is the
    minimum only up to n = 8; the real minimiser is near sqrt(2n+4) - 2, so
    from n = 9 on longer arcs are sparser.
    """
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    arcs = min(Fraction(k + 2, k * (n - k)) for k in range(1, n - 1))
    return Fraction(n, 2) * min(Fraction(1), arcs)


def path(n: int) -> Graph:
    return generate(FamilySpec("path", n))


def cycle(n: int) -> Graph:
    return generate(FamilySpec("cycle", n))


def star(n: int) -> Graph:
    return generate(FamilySpec("star", n))


def complete(n: int) -> Graph:
    return generate(FamilySpec("complete", n))


def wheel(n: int) -> Graph:
    return generate(FamilySpec("wheel", n))


def cube() -> Graph:
    return generate(FamilySpec("cube"))


def broom(ell: int, n: int) -> Graph:
    return generate(FamilySpec("broom", n, ell=ell))


def starlike(parts: Sequence[int]) -> Graph:
    return generate(FamilySpec("starlike", parts=tuple(parts)))


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform labeled tree decoded from a random Pruefer sequence."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    if n <= 2:
        return Graph(n, [(0, 1)] if n == 2 else [])
    seq = [int(v) for v in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = degree.index(1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [i for i in range(n) if degree[i] == 1]
    edges.append((u, w))
    return Graph(n, edges)


def random_connected_graph(n: int, rng: np.random.Generator, p: float = 0.3) -> Graph:
    """Random spanning tree plus each remaining pair independently with probability ``p``."""
    T = random_tree(n, rng)
    edges = set(T.edges)
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in edges and rng.random() < p:
                edges.add((i, j))
    return Graph(n, edges)


@dataclass(frozen=True, eq=False)
class GeometricGraph:
    graph: Graph
    points: np.ndarray
    seed: int
    attempts: int


def random_geometric_graph(n: int, radius: float, seed: int = 0, max_retries: int = 100) -> GeometricGraph:
    """Uniform points in the unit square joined when closer than ``radius``.

    Disconnected draws are discarded and the seed incremented, up to
    ``max_retries`` attempts; the seed that produced the graph is returned.
    """
    if n < 1 or radius <= 0:
        raise ValueError("need n >= 1 and a positive radius")
    for attempt in range(max_retries):
        s = seed + attempt
        pts = np.random.default_rng(s).random((n, 2))
        d = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
        iu, ju = np.nonzero(np.triu(d < radius, k=1))
        G = Graph(n, zip(iu.tolist(), ju.tolist()))
        if is_connected(G):
            return GeometricGraph(G, pts, s, attempt + 1)
    raise RuntimeError(f"no connected geometric graph after {max_retries} attempts from seed {seed}")
