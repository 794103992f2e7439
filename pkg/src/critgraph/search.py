"""Induced-subgraph containment: find an embedding of a pattern in a host or
certify that the host is pattern-free.

The matcher backtracks over pattern vertices in a connectivity-aware static
order (components largest first; inside a component every vertex after the
first has an already-placed neighbour).  Candidate host vertices are tracked
as bitmasks and filtered by degree and by adjacency/non-adjacency to every
placed vertex, so disconnected patterns automatically confine later
components to non-neighbours of what was already placed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .graphs import Graph, bits


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern vertex ``i`` -> host vertex ``vertices[i]``.

    Valid when pattern adjacency and non-adjacency are both preserved.
    """

    pattern: Graph
    vertices: tuple[int, ...]

    def is_valid_in(self, host: Graph) -> bool:
        vs = self.vertices
        if len(vs) != self.pattern.n or len(set(vs)) != len(vs):
            return False
        if any(not 0 <= v < host.n for v in vs):
            return False
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                if self.pattern.has_edge(i, j) != host.has_edge(vs[i], vs[j]):
                    return False
        return True


@dataclass(frozen=True)
class FamilyViolation:
    pattern_index: int
    embedding: Embedding


def _components(g: Graph) -> list[list[int]]:
    out = []
    todo = g.full_mask
    while todo:
        start = (todo & -todo).bit_length() - 1
        comp = 1 << start
        while True:
            grown = comp
            for v in bits(comp):
                grown |= g.adj[v] & todo
            if grown == comp:
                break
            comp = grown
        out.append(list(bits(comp)))
        todo &= ~comp
    return out


@lru_cache(maxsize=512)
def _plan(pattern: Graph) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Static placement order plus per-position adjacency masks and degrees."""
    comps = sorted(_components(pattern), key=lambda c: (-len(c), c[0]))
    order: list[int] = []
    for comp in comps:
        start = max(comp, key=lambda v: (pattern.degree(v), -v))
        chosen = [start]
        chosen_set = {start}
        while len(chosen) < len(comp):
            best = None
            best_key = None
            for v in comp:
                if v in chosen_set:
                    continue
                placed_nbrs = sum(1 for u in chosen if pattern.has_edge(u, v))
                if placed_nbrs == 0:
                    continue
                key = (placed_nbrs, pattern.degree(v), -v)
                if best_key is None or key > best_key:
                    best, best_key = v, key
            chosen.append(best)
            chosen_set.add(best)
        order.extend(chosen)
    pos_adj = []
    for t, v in enumerate(order):
        m = 0
        for s, u in enumerate(order):
            if pattern.has_edge(v, u):
                m |= 1 << s
        pos_adj.append(m)
    degs = tuple(pattern.degree(v) for v in order)
    return tuple(order), tuple(pos_adj), degs


def find_induced(
    host: Graph,
    pattern: Graph,
    require: int | None = None,
    allow_isolated_role: bool = True,
) -> Embedding | None:
    """An induced embedding of ``pattern`` in ``host``, or None if host is free.

    With ``require`` set, only embeddings whose image contains that host
    vertex are considered (used by the enumerator, where a freshly added
    vertex is the only place a new violation can appear).  A caller that has
    separately excluded embeddings mapping an isolated pattern vertex to
    ``require`` can pass ``allow_isolated_role=False`` to skip those roles.
    """
    if pattern.n == 0:
        raise ValueError("pattern must have at least one vertex")
    pn = pattern.n
    if pn > host.n:
        return None
    order, pos_adj, pdegs = _plan(pattern)
    hadj = host.adj
    hn = host.n

    degree_masks: dict[int, int] = {}
    base = []
    for t in range(pn):
        d = pdegs[t]
        m = degree_masks.get(d)
        if m is None:
            m = 0
            for v in range(hn):
                if hadj[v].bit_count() >= d:
                    m |= 1 << v
            degree_masks[d] = m
        base.append(m)

    assign = [0] * pn

    def rec(t: int, masks: list[int], used: int) -> bool:
        if t == pn:
            return True
        avail = masks[t] & ~used
        pa = pos_adj[t]
        while avail:
            low = avail & -avail
            avail ^= low
            v = low.bit_length() - 1
            nb = hadj[v]
            new_masks = masks[:]
            ok = True
            for s in range(t + 1, pn):
                if (pa >> s) & 1:
                    nm = new_masks[s] & nb
                else:
                    nm = new_masks[s] & ~nb & ~low
                if nm == 0:
                    ok = False
                    break
                new_masks[s] = nm
            if ok:
                assign[t] = v
                if rec(t + 1, new_masks, used | low):
                    return True
        return False

    def build() -> Embedding:
        verts = [0] * pn
        for t, pv in enumerate(order):
            verts[pv] = assign[t]
        emb = Embedding(pattern, tuple(verts))
        assert emb.is_valid_in(host)
        return emb

    if require is None:
        if rec(0, base, 0):
            return build()
        return None
    rbit = 1 << require
    for t in range(pn):
        if not base[t] & rbit:
            continue
        if not allow_isolated_role and pdegs[t] == 0:
            continue
        masks = base[:]
        masks[t] = rbit
        if rec(0, masks, 0):
            return build()
    return None


def induced_copy_masks(host: Graph, pattern: Graph) -> list[int]:
    """Vertex masks of every induced copy of ``pattern`` in ``host``, sorted."""
    if pattern.n == 0:
        raise ValueError("pattern must have at least one vertex")
    pn = pattern.n
    if pn > host.n:
        return []
    _, pos_adj, _ = _plan(pattern)
    hadj = host.adj
    found: set[int] = set()

    def rec(t: int, masks: list[int], used: int) -> None:
        if t == pn:
            found.add(used)
            return
        avail = masks[t] & ~used
        pa = pos_adj[t]
        while avail:
            low = avail & -avail
            avail ^= low
            nb = hadj[low.bit_length() - 1]
            new_masks = masks[:]
            ok = True
            for s in range(t + 1, pn):
                if (pa >> s) & 1:
                    nm = new_masks[s] & nb
                else:
                    nm = new_masks[s] & ~nb & ~low
                if nm == 0:
                    ok = False
                    break
                new_masks[s] = nm
            if ok:
                rec(t + 1, new_masks, used | low)

    rec(0, [host.full_mask] * pn, 0)
    return sorted(found)


def family_violation(
    g: Graph, forbidden: Sequence[Graph], require: int | None = None
) -> FamilyViolation | None:
    """First forbidden pattern embedded in ``g``, or None for a family member.

    Patterns are checked in the given order and the search short-circuits.
    """
    for idx, pat in enumerate(forbidden):
        emb = find_induced(g, pat, require=require)
        if emb is not None:
            return FamilyViolation(idx, emb)
    return None


def is_family_member(g: Graph, forbidden: Sequence[Graph]) -> bool:
    return family_violation(g, forbidden) is None


def mixed_vertices(g: Graph, s: int) -> int:
    """Vertices outside ``s`` that are neither complete nor anticomplete to it."""
    if s == 0:
        raise ValueError("mixed_vertices needs a nonempty vertex set")
    if s & ~g.full_mask:
        raise ValueError("vertex set has bits outside the graph")
    out = 0
    for v in bits(g.full_mask & ~s):
        x = g.adj[v] & s
        if x != 0 and x != s:
            out |= 1 << v
    return out
