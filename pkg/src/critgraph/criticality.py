"""Vertex-criticality tests and the comparable-vertex/clique pruning rules.

A graph is k-vertex-critical when its chromatic number is k and deleting any
single vertex drops it.  A vertex-critical graph can contain no comparable
pair: distinct nonadjacent vertices a, b with N(a) a subset of N(b).  The
clique generalisation (disjoint ordered m-cliques with index-wise
neighbourhood containment outside the cliques) is exposed for m <= 3; the
enumerator only ever needs m = 1.
"""

from __future__ import annotations

from itertools import permutations

from .coloring import Colouring, k_colourable
from .graphs import Graph, bits, without_vertex


class NotCriticalError(ValueError):
    """Witness extraction was asked for a graph that is not critical."""


def is_k_vertex_critical(g: Graph, k: int) -> bool:
    """True iff chi(g) = k and chi(g - v) = k - 1 for every vertex v."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 0:
        return False
    if k_colourable(g, k - 1) is not None:  # chi < k
        return False
    if k_colourable(g, k) is None:  # chi > k
        return False
    return all(
        k_colourable(without_vertex(g, v), k - 1) is not None for v in range(g.n)
    )


def criticality_failure(g: Graph, k: int) -> str | None:
    """None when g is k-vertex-critical, else a short reason code."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 0:
        return "empty-graph"
    if k_colourable(g, k - 1) is not None:
        return "chromatic-number-below-k"
    if k_colourable(g, k) is None:
        return "chromatic-number-above-k"
    for v in range(g.n):
        if k_colourable(without_vertex(g, v), k - 1) is None:
            return f"deletion-of-{v}-keeps-chromatic-number"
    return None


def comparable_pair(g: Graph) -> tuple[int, int] | None:
    """Distinct nonadjacent (a, b) with N(a) contained in N(b), or None."""
    adj = g.adj
    for a in range(g.n):
        ra = adj[a]
        for b in range(g.n):
            if a == b or (ra >> b) & 1:
                continue
            if ra & ~adj[b] == 0:
                return (a, b)
    return None


def comparable_masks(g: Graph) -> tuple[int, int]:
    """(dominated, dominating) vertex masks over all comparable pairs."""
    adj = g.adj
    dominated = 0
    dominating = 0
    for a in range(g.n):
        ra = adj[a]
        for b in range(g.n):
            if a == b or (ra >> b) & 1:
                continue
            if ra & ~adj[b] == 0:
                dominated |= 1 << a
                dominating |= 1 << b
    return dominated, dominating


def _cliques_of_size(g: Graph, m: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def grow(prefix: list[int], allowed: int) -> None:
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for v in bits(allowed):
            grow(prefix + [v], allowed & g.adj[v] & ~((1 << (v + 1)) - 1))

    grow([], g.full_mask)
    return out


def comparable_cliques(
    g: Graph, m: int
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Disjoint ordered m-cliques (A, B) with N(a_i)\\A contained in N(b_i)\\B.

    Practical for m <= 3; the search is exhaustive over ordered clique pairs.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if 2 * m > g.n:
        return None
    adj = g.adj
    cliques = _cliques_of_size(g, m)
    for a_sorted in cliques:
        amask = 0
        for v in a_sorted:
            amask |= 1 << v
        outside_a = [adj[v] & ~amask for v in a_sorted]
        for b_sorted in cliques:
            bmask = 0
            for v in b_sorted:
                bmask |= 1 << v
            if amask & bmask:
                continue
            for b_perm in permutations(b_sorted):
                if all(
                    outside_a[i] & ~(adj[b_perm[i]] & ~bmask) == 0 for i in range(m)
                ):
                    return a_sorted, b_perm
    return None


def criticality_witnesses(g: Graph, k: int) -> list[Colouring]:
    """Per-vertex (k-1)-colourings of g - v, one for each deleted vertex.

    Vertex i's witness colours ``g`` with vertex i removed and the rest
    relabelled by increasing original index.
    """
    if not is_k_vertex_critical(g, k):
        raise NotCriticalError(f"graph is not {k}-vertex-critical")
    out = []
    for v in range(g.n):
        col = k_colourable(without_vertex(g, v), k - 1)
        assert col is not None  # guaranteed by criticality
        out.append(col)
    return out
