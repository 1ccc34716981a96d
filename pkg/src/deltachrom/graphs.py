"""Immutable bitset-backed graphs and the core structural operations.

Vertices are dense integer ids ``0..n-1``; adjacency is one Python int
bitmask per vertex, which keeps complements, delta-complements and
product assembly cheap at desk scale. All operations return new graphs,
so instances can be shared freely, including across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_PRODUCT_VERTICES = 10_000


class SizeLimitError(ValueError):
    """An operation would exceed the configured vertex budget."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices ``0..n-1``, immutable after build.

    Invariants enforced at construction: no self-loops, symmetric
    adjacency, all neighbor ids in range.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def _from_masks(cls, n: int, masks: Sequence[int]) -> "Graph":
        # internal fast path; callers must guarantee symmetry and no loops
        g = cls.__new__(cls)
        g.n = n
        g._adj = tuple(masks)
        return g

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def adjacency_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(iter_bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (a, b) with a < b, in lexicographic order."""
        out = []
        for u in range(self.n):
            above = self._adj[u] >> (u + 1) << (u + 1)
            for v in iter_bits(above):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


@dataclass(frozen=True)
class DegreePartition:
    """Vertex classes grouped by degree, strictly ascending in degree.

    Classes are disjoint, nonempty and cover every vertex; ``m`` is the
    number of distinct degrees and ``n_max`` the largest class size.
    """

    classes: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def m(self) -> int:
        return len(self.classes)

    @property
    def n_max(self) -> int:
        return max((len(vs) for _, vs in self.classes), default=0)

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(vs) for _, vs in self.classes)


def degree_partition(g: Graph) -> DegreePartition:
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.degree(v), []).append(v)
    classes = tuple((d, tuple(groups[d])) for d in sorted(groups))
    return DegreePartition(classes)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    masks = [full & ~g._adj[v] & ~(1 << v) for v in range(g.n)]
    return Graph._from_masks(g.n, masks)


def delta_complement(g: Graph) -> Graph:
    """Flip adjacency inside each degree class, keep it across classes.

    Edge rule: uv is an edge of the result iff either d(u) = d(v) and uv
    is a non-edge of g, or d(u) != d(v) and uv is an edge of g, with
    degrees measured in g.
    """
    full = (1 << g.n) - 1
    same: dict[int, int] = {}
    for v in range(g.n):
        d = g._adj[v].bit_count()
        same[d] = same.get(d, 0) | (1 << v)
    masks = []
    for v in range(g.n):
        s = same[g._adj[v].bit_count()]
        a = g._adj[v]
        masks.append((s & ~a & ~(1 << v)) | (~s & a & full))
    return Graph._from_masks(g.n, masks)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on the given vertex set, remapped to 0..len-1 in sorted order."""
    vs = sorted(set(vertices))
    pos = {}
    for i, v in enumerate(vs):
        g._check_vertex(v)
        pos[v] = i
    edges = []
    for u in vs:
        for w in g.neighbors(u):
            if u < w and w in pos:
                edges.append((pos[u], pos[w]))
    return Graph(len(vs), edges)


@dataclass(frozen=True)
class ProductIndex:
    """Mixed-radix bijection between factor coordinates and flat vertex ids.

    Row-major with the last coordinate fastest, fixed once for
    reproducibility of every product-derived artifact.
    """

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.sizes:
            raise ValueError("at least one factor size required")
        if any(s <= 0 for s in self.sizes):
            raise ValueError(f"factor sizes must be positive, got {self.sizes}")

    @property
    def total(self) -> int:
        t = 1
        for s in self.sizes:
            t *= s
        return t

    @property
    def strides(self) -> tuple[int, ...]:
        strides = [1] * len(self.sizes)
        for i in range(len(self.sizes) - 2, -1, -1):
            strides[i] = strides[i + 1] * self.sizes[i + 1]
        return tuple(strides)

    def flat(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.sizes):
            raise ValueError(f"expected {len(self.sizes)} coordinates, got {len(coords)}")
        out = 0
        for c, s, st in zip(coords, self.sizes, self.strides):
            if not 0 <= c < s:
                raise ValueError(f"coordinate {c} out of range [0,{s})")
            out += c * st
        return out

    def unflat(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.total:
            raise ValueError(f"flat id {v} out of range [0,{self.total})")
        coords = []
        for st in self.strides:
            coords.append(v // st)
            v %= st
        return tuple(coords)


def cartesian_product(
    factors: Sequence[Graph], max_vertices: int = MAX_PRODUCT_VERTICES
) -> tuple[Graph, ProductIndex]:
    """Cartesian product of the factors, plus the coordinate bijection.

    Two tuples are adjacent iff they differ in exactly one coordinate i
    and the differing pair is an edge of the i-th factor.
    """
    fs = list(factors)
    if not fs:
        raise ValueError("at least one factor required")
    if any(g.n == 0 for g in fs):
        raise ValueError("product factors must be nonempty")
    index = ProductIndex(tuple(g.n for g in fs))
    if index.total > max_vertices:
        raise SizeLimitError(
            f"product has {index.total} vertices, over the {max_vertices} budget"
        )
    strides = index.strides
    n = index.total
    masks = [0] * n
    coords = [0] * len(fs)
    for v in range(n):
        mv = 0
        for i, gi in enumerate(fs):
            st = strides[i]
            base = v - coords[i] * st
            for w in iter_bits(gi._adj[coords[i]]):
                mv |= 1 << (base + w * st)
        masks[v] = mv
        for i in range(len(fs) - 1, -1, -1):
            coords[i] += 1
            if coords[i] < fs[i].n:
                break
            coords[i] = 0
    return Graph._from_masks(n, masks), index


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        fresh = g._adj[v] & ~seen
        for w in iter_bits(fresh):
            if not seen >> w & 1:
                seen |= 1 << w
                frontier.append(w)
    return seen == (1 << g.n) - 1


def to_json(g: Graph) -> str:
    """Byte-stable JSON: sorted edge list with a < b, compact separators."""
    payload = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    return json.dumps(payload, separators=(",", ":"))


def from_json(text: str) -> Graph:
    data = json.loads(text)
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ValueError("graph JSON must be an object with 'n' and 'edges'")
    return Graph(int(data["n"]), [tuple(e) for e in data["edges"]])


def to_dot(
    g: Graph, colors: Sequence[int] | None = None, one_based: bool = False
) -> str:
    """DOT export, one line per edge; per-vertex color attributes optional."""
    off = 1 if one_based else 0
    lines = ["graph {"]
    if colors is not None:
        if len(colors) != g.n:
            raise ValueError(f"{len(colors)} colors for {g.n} vertices")
        for v in range(g.n):
            lines.append(f"  {v + off} [color={colors[v] + off}];")
    for a, b in g.edges():
        lines.append(f"  {a + off} -- {b + off};")
    lines.append("}")
    return "\n".join(lines) + "\n"
