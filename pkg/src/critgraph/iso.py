"""Exact canonical labelling, isomorphism testing, and isomorph-free
generation of all small graphs.

Canonical forms come from the classic individualisation-refinement scheme:
vertices are partitioned by iterated equitable refinement (colours start from
degrees, then keep splitting by neighbour counts into each cell until
stable), and a backtracking search individualises one vertex of the first
non-singleton cell at a time.  Among all discrete partitions reached, the
labelling whose upper-triangle adjacency bit string is lexicographically
smallest wins; that bit string is exactly the graph6 payload, so the
canonical form is the graph6 word of the relabelled graph.  Two labellings
that tie expose an automorphism, and known automorphisms are used to skip
equivalent branches, which keeps highly symmetric inputs (cliques, unions of
isolated vertices) far from the factorial worst case.

Isomorph-free generation uses canonical augmentation: a child built by adding
one vertex to a parent is accepted exactly when deleting the child's
canonical last vertex gives back that parent's canonical form.  Together with
per-parent deduplication this yields each isomorphism class exactly once,
with no global seen-set.
"""

from __future__ import annotations

from typing import Iterator

from .graphs import (
    Graph,
    add_vertex,
    emit_graph6,
    relabel,
    without_vertex,
)

# Number of isomorphism classes of simple graphs of order 0..8.
SMALL_GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346)
ALL_GRAPHS_MAX = 8

_MAX_STORED_AUTOMORPHISMS = 64


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition to equitability.

    Cells are re-split by the vector of neighbour counts into every current
    cell; new cells are ordered by that vector, so the resulting ordered
    partition is invariant under relabelling.
    """
    while True:
        masks = [_cell_mask(c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                key = tuple((row & m).bit_count() for m in masks)
                buckets.setdefault(key, []).append(v)
            if len(buckets) == 1:
                out.append(cell)
            else:
                changed = True
                for key in sorted(buckets):
                    out.append(buckets[key])
        if not changed:
            return out
        cells = out


def _cell_mask(cell: list[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _orbit_hits(v: int, gens: list[tuple[int, ...]], done: list[int]) -> bool:
    """True when v maps into ``done`` under the group generated by ``gens``."""
    seen = {v}
    stack = [v]
    targets = set(done)
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                if y in targets:
                    return True
                seen.add(y)
                stack.append(y)
    return False


def canonical_order(g: Graph) -> tuple[int, ...]:
    """A relabelling (new index -> old vertex) realizing the canonical form.

    Deterministic: the same graph always yields the same order.
    """
    n = g.n
    if n <= 1:
        return tuple(range(n))
    adj = g.adj
    total_bits = n * (n - 1) // 2

    best_val: int | None = None
    best_order: tuple[int, ...] | None = None
    auts: list[tuple[int, ...]] = []

    def pack(order: list[int] | tuple[int, ...]) -> int:
        val = 0
        for j in range(1, len(order)):
            row = adj[order[j]]
            for i in range(j):
                val = (val << 1) | ((row >> order[i]) & 1)
        return val

    def search(cells: list[list[int]], fixed: tuple[int, ...]) -> None:
        nonlocal best_val, best_order
        prefix: list[int] = []
        for c in cells:
            if len(c) != 1:
                break
            prefix.append(c[0])
        if best_val is not None and len(prefix) > 1:
            b = len(prefix) * (len(prefix) - 1) // 2
            if pack(prefix) > best_val >> (total_bits - b):
                return
        if len(prefix) == len(cells):
            order = tuple(prefix)
            val = pack(order)
            if best_val is None or val < best_val:
                best_val, best_order = val, order
            elif val == best_val and len(auts) < _MAX_STORED_AUTOMORPHISMS:
                perm = [0] * n
                for p in range(n):
                    perm[best_order[p]] = order[p]
                auts.append(tuple(perm))
            return
        idx = len(prefix)
        cell = cells[idx]
        done: list[int] = []
        for v in cell:
            if done:
                gens = [a for a in auts if all(a[f] == f for f in fixed)]
                if gens and _orbit_hits(v, gens, done):
                    continue
            done.append(v)
            rest = [u for u in cell if u != v]
            sub = cells[:idx] + [[v], rest] + cells[idx + 1:]
            search(_refine(adj, sub), fixed + (v,))

    search(_refine(adj, [list(range(n))]), ())
    assert best_order is not None
    return best_order


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabelled copy of ``g``."""
    return relabel(g, canonical_order(g))


def canonical_form(g: Graph) -> str:
    """Canonical graph6 word: equal for two graphs iff they are isomorphic."""
    return emit_graph6(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test with cheap invariant fast-rejects."""
    if g.n != h.n:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


def augmentation_accepted(child: Graph, parent_canon: str, child_order: tuple[int, ...]) -> bool:
    """Canonical-augmentation acceptance for ``child = parent + last vertex``.

    ``child_order`` must be ``canonical_order(child)``; ``parent_canon`` the
    parent's canonical form.  Accepts exactly when deleting the canonical
    last vertex of the child gives back the parent's isomorphism class, so
    every class is generated from a single parent class.
    """
    v_star = child_order[-1]
    if v_star == child.n - 1:
        return True
    return canonical_form(without_vertex(child, v_star)) == parent_canon


def graph_levels(n: int) -> list[list[Graph]]:
    """One representative per isomorphism class for every order 0..n.

    Level lists hold canonically labelled graphs sorted by canonical form.
    """
    if n < 0 or n > ALL_GRAPHS_MAX:
        raise ValueError(f"exhaustive generation is limited to order <= {ALL_GRAPHS_MAX}")
    levels: list[list[Graph]] = [[Graph.empty(0)]]
    for m in range(n):
        nxt: list[tuple[str, Graph]] = []
        for parent in levels[m]:
            parent_canon = emit_graph6(parent)  # levels store canonical labellings
            seen: set[str] = set()
            for s in range(1 << m):
                child = add_vertex(parent, s)
                order = canonical_order(child)
                cg = relabel(child, order)
                c6 = emit_graph6(cg)
                if c6 in seen:
                    continue
                seen.add(c6)
                if augmentation_accepted(child, parent_canon, order):
                    nxt.append((c6, cg))
        nxt.sort(key=lambda t: t[0])
        levels.append([cg for _, cg in nxt])
    return levels


def all_graphs(n: int) -> Iterator[Graph]:
    """All order-n simple graphs, one per isomorphism class (n <= 8)."""
    return iter(graph_levels(n)[n])
