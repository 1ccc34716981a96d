"""Naive reference implementations, independent of the package internals.

These are deliberately written with dictionaries, tuples and exhaustive
loops rather than bitmasks, so they share no code path with the library
they check. Sizes are tiny; clarity beats speed.
"""

from __future__ import annotations

from itertools import combinations, permutations, product as iproduct

from deltachrom import Graph


def naive_delta_edges(g: Graph) -> set[tuple[int, int]]:
    """Pairwise application of the delta-complement edge rule."""
    deg = {v: len(g.neighbors(v)) for v in range(g.n)}
    out = set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            adjacent = v in g.neighbors(u)
            if deg[u] == deg[v]:
                if not adjacent:
                    out.add((u, v))
            elif adjacent:
                out.add((u, v))
    return out


def naive_product_edges(factors: list[Graph]) -> set[tuple[int, int]]:
    """Product edges via explicit tuple vertices, row-major flattening."""
    sizes = [g.n for g in factors]
    tuples = list(iproduct(*[range(s) for s in sizes]))
    flat = {t: i for i, t in enumerate(tuples)}
    out = set()
    for a in tuples:
        for b in tuples:
            if flat[a] >= flat[b]:
                continue
            diff = [i for i in range(len(a)) if a[i] != b[i]]
            if len(diff) == 1 and factors[diff[0]].has_edge(a[diff[0]], b[diff[0]]):
                out.add((flat[a], flat[b]))
    return out


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Exhaustive isomorphism test; intended for at most 8 vertices."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    assert g.n <= 8
    ge = set(g.edges())
    for perm in permutations(range(g.n)):
        mapped = {tuple(sorted((perm[a], perm[b]))) for a, b in ge}
        if mapped == set(h.edges()):
            return True
    return False


def brute_clique_number(g: Graph) -> int:
    """Largest pairwise-adjacent set by descending exhaustive search."""
    assert g.n <= 16
    for size in range(g.n, 0, -1):
        for candidate in combinations(range(g.n), size):
            if all(g.has_edge(a, b) for a, b in combinations(candidate, 2)):
                return size
    return 0


def exhaustive_chromatic(g: Graph) -> int:
    """Minimum k over all k^n assignments; intended for at most 6 vertices."""
    assert g.n <= 6
    if g.n == 0:
        return 0
    edges = g.edges()
    for k in range(1, g.n + 1):
        for assignment in iproduct(range(k), repeat=g.n):
            if all(assignment[a] != assignment[b] for a, b in edges):
                return k
    return g.n
