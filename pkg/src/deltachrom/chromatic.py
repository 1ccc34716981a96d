"""Exact chromatic number engine with certified lower and upper bounds.

Strategy: a branch-and-bound maximum clique gives the lower bound, a
DSATUR coloring the upper bound. When they agree the value is certified
by the sandwich alone; otherwise a k-colorability backtracking search
(static DSATUR vertex order, forward checking over bitmask color
domains, color symmetry broken by pinning a maximum clique to colors
0..|clique|-1) decides each k from the lower bound upward.

Everything is deterministic: ties break toward the lowest vertex id and
colors are tried in increasing order, so the same graph always yields
the same witness.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass

from .graphs import Graph, delta_complement, iter_bits

DEFAULT_TIMEOUT = 60.0
DEFAULT_CLIQUE_BUDGET = 10_000_000
ORACLE_VERTEX_LIMIT = 12


class SolverTimeout(Exception):
    """Internal signal: the deadline or node budget was hit."""


@dataclass(frozen=True)
class Coloring:
    """Total vertex -> color assignment with an explicit palette size."""

    colors: tuple[int, ...]
    palette_size: int

    def __post_init__(self) -> None:
        for c in self.colors:
            if not 0 <= c < self.palette_size:
                raise ValueError(f"color {c} outside palette [0,{self.palette_size})")

    @property
    def colors_used(self) -> int:
        return len(set(self.colors))


def is_proper(g: Graph, coloring: Coloring) -> bool:
    """True iff no edge of g is monochromatic under the coloring."""
    if len(coloring.colors) != g.n:
        raise ValueError(
            f"coloring covers {len(coloring.colors)} vertices, graph has {g.n}"
        )
    cols = coloring.colors
    for u in range(g.n):
        above = g.adjacency_mask(u) >> (u + 1) << (u + 1)
        for v in iter_bits(above):
            if cols[u] == cols[v]:
                return False
    return True


@dataclass(frozen=True)
class CliqueResult:
    size: int
    vertices: tuple[int, ...]
    complete: bool  # False when the node budget ran out before exhausting


def max_clique_lower(
    g: Graph, budget: int = DEFAULT_CLIQUE_BUDGET, deadline: float | None = None
) -> CliqueResult:
    """Branch-and-bound maximum clique with greedy-coloring pruning.

    With an unexhausted budget the result is the maximum clique; on
    budget (or deadline) exhaustion the best clique found so far is
    returned with ``complete=False``. The returned vertex set is
    re-verified to be pairwise adjacent before returning.
    """
    n = g.n
    if n == 0:
        return CliqueResult(0, (), True)
    adj = [g.adjacency_mask(v) for v in range(n)]
    best = {"size": 0, "mask": 0, "nodes": 0}

    def color_sort(cand: int) -> tuple[list[int], list[int]]:
        # greedy coloring of the candidate set; bounds ascend with order
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        rest = cand
        while rest:
            color += 1
            q = rest
            klass = 0
            while q:
                low = q & -q
                v = low.bit_length() - 1
                order.append(v)
                bounds.append(color)
                klass |= low
                q &= ~(adj[v] | low)
            rest &= ~klass
        return order, bounds

    def expand(rmask: int, rsize: int, cand: int) -> None:
        best["nodes"] += 1
        if best["nodes"] > budget:
            raise SolverTimeout
        if deadline is not None and best["nodes"] % 256 == 1 and time.monotonic() > deadline:
            raise SolverTimeout
        order, bounds = color_sort(cand)
        local = cand
        for i in range(len(order) - 1, -1, -1):
            if rsize + bounds[i] <= best["size"]:
                return
            v = order[i]
            vb = 1 << v
            nxt = local & adj[v]
            if nxt:
                expand(rmask | vb, rsize + 1, nxt)
            elif rsize + 1 > best["size"]:
                best["size"] = rsize + 1
                best["mask"] = rmask | vb
            local &= ~vb

    complete = True
    try:
        expand(0, 0, (1 << n) - 1)
    except SolverTimeout:
        complete = False

    verts = tuple(iter_bits(best["mask"]))
    for i, a in enumerate(verts):
        for b in verts[i + 1 :]:
            if not g.has_edge(a, b):
                raise RuntimeError("internal error: clique verification failed")
    return CliqueResult(best["size"], verts, complete)


def _dsatur(g: Graph) -> tuple[list[int], list[int]]:
    """DSATUR colors and the order vertices were colored in.

    Vertex choice: maximum saturation, then maximum degree, then lowest
    id, which makes both outputs deterministic.
    """
    n = g.n
    colors = [-1] * n
    neighbor_colors = [0] * n
    degrees = [g.degree(v) for v in range(n)]
    order: list[int] = []
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] == -1),
            key=lambda u: (neighbor_colors[u].bit_count(), degrees[u], -u),
        )
        c = 0
        while neighbor_colors[v] >> c & 1:
            c += 1
        colors[v] = c
        order.append(v)
        for w in iter_bits(g.adjacency_mask(v)):
            neighbor_colors[w] |= 1 << c
    return colors, order


def dsatur_upper(g: Graph) -> Coloring:
    """Proper DSATUR coloring; deterministic given the graph."""
    if g.n == 0:
        return Coloring((), 0)
    colors, _ = _dsatur(g)
    return Coloring(tuple(colors), max(colors) + 1)


def _k_coloring_search(
    g: Graph,
    k: int,
    clique: tuple[int, ...],
    order: list[int],
    deadline: float,
    dynamic_order: bool = False,
) -> tuple[int, ...] | None:
    """Find a proper k-coloring or prove none exists.

    Forward checking over per-vertex color-domain bitmasks. Only the
    first unused color may open a new color class, which prunes nothing
    but palette permutations. ``dynamic_order=True`` switches to
    most-constrained-first vertex selection (still deterministic).
    """
    n = g.n
    if len(clique) > k:
        return None
    full = (1 << k) - 1
    avail = [full] * n
    colors = [-1] * n
    adj = [g.adjacency_mask(v) for v in range(n)]

    def assign(v: int, c: int) -> tuple[list[int], bool]:
        colors[v] = c
        bit = 1 << c
        touched: list[int] = []
        for u in iter_bits(adj[v]):
            if colors[u] == -1 and avail[u] & bit:
                avail[u] ^= bit
                touched.append(u)
                if not avail[u]:
                    return touched, False
        return touched, True

    def undo(v: int, c: int, touched: list[int]) -> None:
        bit = 1 << c
        for u in touched:
            avail[u] |= bit
        colors[v] = -1

    for i, v in enumerate(clique):
        if not avail[v] >> i & 1:
            return None
        _, ok = assign(v, i)
        if not ok:
            return None

    rest = [v for v in order if colors[v] == -1]
    ticks = 0

    def pick(idx: int) -> int:
        if not dynamic_order:
            return idx
        best_j = idx
        best_key = None
        for j in range(idx, len(rest)):
            key = (avail[rest[j]].bit_count(), rest[j])
            if best_key is None or key < best_key:
                best_key = key
                best_j = j
        return best_j

    def search(idx: int, used: int) -> bool:
        nonlocal ticks
        ticks += 1
        if ticks % 256 == 1 and time.monotonic() > deadline:
            raise SolverTimeout
        if idx == len(rest):
            return True
        j = pick(idx)
        rest[idx], rest[j] = rest[j], rest[idx]
        v = rest[idx]
        cap = (1 << min(k, used + 1)) - 1
        cand = avail[v] & cap
        found = False
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            cand ^= low
            touched, ok = assign(v, c)
            if ok and search(idx + 1, max(used, c + 1)):
                found = True
                break
            undo(v, c, touched)
        if not found:
            rest[idx], rest[j] = rest[j], rest[idx]
        return found

    if search(0, len(clique)):
        return tuple(colors)
    return None


@dataclass(frozen=True)
class ChromaticResult:
    """Outcome of an exact chromatic number computation.

    When ``exact`` the witness is proper and uses exactly ``chi``
    colors; on timeout only the bracketing interval [lower, upper] is
    certified and ``chi`` is None.
    """

    chi: int | None
    lower: int
    upper: int
    exact: bool
    witness: Coloring
    clique_lower: int
    clique: tuple[int, ...]
    method: str  # "sandwich" | "branch-and-bound" | "oracle"
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "chi": self.chi,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "witness": list(self.witness.colors),
            "method": self.method,
            "ms": int(self.elapsed * 1000),
        }


def chromatic_number(
    g: Graph,
    timeout: float = DEFAULT_TIMEOUT,
    clique_budget: int = DEFAULT_CLIQUE_BUDGET,
    dynamic_order: bool = False,
) -> ChromaticResult:
    """Exact chromatic number with a proper witness coloring.

    Runs the clique/DSATUR sandwich first; any remaining gap is closed
    by deciding k-colorability for k from the clique bound upward. On
    timeout the result is flagged inexact and carries the certified
    bracket plus the best proper coloring found.
    """
    start = time.perf_counter()
    deadline = time.monotonic() + timeout
    if g.n == 0:
        empty = Coloring((), 0)
        return ChromaticResult(0, 0, 0, True, empty, 0, (), "sandwich", 0.0)
    # search recursion is one frame per vertex
    if sys.getrecursionlimit() < 2 * g.n + 200:
        sys.setrecursionlimit(2 * g.n + 200)

    cl = max_clique_lower(g, clique_budget, deadline)
    ds_colors, order = _dsatur(g)
    ds = Coloring(tuple(ds_colors), max(ds_colors) + 1)
    upper = ds.palette_size
    lower = cl.size
    if lower == upper:
        return ChromaticResult(
            upper, lower, upper, True, ds, cl.size, cl.vertices,
            "sandwich", time.perf_counter() - start,
        )

    k = lower
    while k < upper:
        try:
            solution = _k_coloring_search(g, k, cl.vertices, order, deadline, dynamic_order)
        except SolverTimeout:
            return ChromaticResult(
                None, k, upper, False, ds, cl.size, cl.vertices,
                "branch-and-bound", time.perf_counter() - start,
            )
        if solution is not None:
            witness = Coloring(solution, k)
            return ChromaticResult(
                k, k, k, True, witness, cl.size, cl.vertices,
                "branch-and-bound", time.perf_counter() - start,
            )
        k += 1

    # every k below the DSATUR value is infeasible, so DSATUR was optimal
    return ChromaticResult(
        upper, upper, upper, True, ds, cl.size, cl.vertices,
        "branch-and-bound", time.perf_counter() - start,
    )


def oracle_chromatic(g: Graph) -> int:
    """Brute-force chromatic number for graphs with at most 12 vertices.

    Deliberately independent of the main engine: vertices in id order,
    no clique bound, no saturation heuristic, no forward checking. The
    only restriction on the exhaustive search is that a new color class
    must open with the smallest unused color, which discards palette
    permutations and nothing else.
    """
    if g.n > ORACLE_VERTEX_LIMIT:
        raise ValueError(f"oracle limited to {ORACLE_VERTEX_LIMIT} vertices, got {g.n}")
    if g.n == 0:
        return 0
    nbrs = [g.neighbors(v) for v in range(g.n)]
    assignment = [-1] * g.n

    def colorable(v: int, k: int, used: int) -> bool:
        if v == g.n:
            return True
        forbidden = {assignment[u] for u in nbrs[v] if assignment[u] != -1}
        for c in range(min(k, used + 1)):
            if c not in forbidden:
                assignment[v] = c
                if colorable(v + 1, k, max(used, c + 1)):
                    return True
                assignment[v] = -1
        return False

    for k in range(1, g.n + 1):
        if colorable(0, k, 0):
            return k
    return g.n


def chi_delta(g: Graph, timeout: float = DEFAULT_TIMEOUT, **kwargs) -> ChromaticResult:
    """Chromatic number of the delta-complement of g."""
    return chromatic_number(delta_complement(g), timeout=timeout, **kwargs)
