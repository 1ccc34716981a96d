"""Structure of delta-complements of Cartesian products.

The delta-complement of a product decomposes as the product of the
factor delta-complements plus an extra edge set S: the pairs of product
vertices that differ in at least two coordinates yet have equal product
degree. Equality of the two graphs holds exactly when at most one factor
has two or more vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import (
    MAX_PRODUCT_VERTICES,
    Graph,
    ProductIndex,
    cartesian_product,
    delta_complement,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class DeltaProductDecomposition:
    """The three graphs of the decomposition plus the extra edge set.

    All live on the same flat vertex ids defined by ``index``. The edge
    set of ``delta_of_product`` equals that of ``product_of_deltas``
    union ``extra_edges``; the two sides are in fact disjoint (product-
    of-deltas edges change exactly one coordinate, extra edges at least
    two), which callers may check but should treat as derived rather
    than definitional.
    """

    product: Graph
    index: ProductIndex
    delta_of_product: Graph
    product_of_deltas: Graph
    extra_edges: tuple[Edge, ...]


def extra_edge_set(
    factors: Sequence[Graph], max_vertices: int = MAX_PRODUCT_VERTICES
) -> list[Edge]:
    """The extra edge set S of the product's delta-complement.

    Exactly the pairs {u, v} of product vertices differing in two or
    more coordinates with equal product degree. Vertices are bucketed by
    degree first, so work is quadratic only within degree classes.
    Returned sorted for determinism.
    """
    fs = list(factors)
    if not fs:
        raise ValueError("at least one factor required")
    product, index = cartesian_product(fs, max_vertices)
    coords = [index.unflat(v) for v in range(product.n)]
    buckets: dict[int, list[int]] = {}
    for v in range(product.n):
        buckets.setdefault(product.degree(v), []).append(v)
    out: list[Edge] = []
    for members in buckets.values():
        for i, u in enumerate(members):
            cu = coords[u]
            for v in members[i + 1 :]:
                cv = coords[v]
                differing = 0
                for a, b in zip(cu, cv):
                    if a != b:
                        differing += 1
                        if differing == 2:
                            break
                if differing >= 2:
                    out.append((u, v))
    out.sort()
    return out


def delta_of_product(
    factors: Sequence[Graph], max_vertices: int = MAX_PRODUCT_VERTICES
) -> DeltaProductDecomposition:
    """Assemble the full decomposition for the given factors."""
    fs = list(factors)
    if not fs:
        raise ValueError("at least one factor required")
    product, index = cartesian_product(fs, max_vertices)
    deltas = [delta_complement(g) for g in fs]
    product_of_deltas, _ = cartesian_product(deltas, max_vertices)
    extra = tuple(extra_edge_set(fs, max_vertices))
    return DeltaProductDecomposition(
        product=product,
        index=index,
        delta_of_product=delta_complement(product),
        product_of_deltas=product_of_deltas,
        extra_edges=extra,
    )


def equality_holds(factors: Sequence[Graph]) -> bool:
    """Whether the product's delta-complement equals the product of deltas.

    True iff at most one factor has two or more vertices (vacuously true
    for an empty factor list). Equivalent to the extra edge set being
    empty.
    """
    return sum(1 for g in factors if g.n >= 2) <= 1
