"""Exact colouring: k-colourability with witness, chromatic number,
independence number, and a greedy clique lower bound.

The decision solver is a DSATUR-ordered backtracker with two standard
steerings that never affect exactness: a greedy clique is pre-coloured, and a
new colour class may only be opened in index order, which kills colour
permutation symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits


@dataclass(frozen=True)
class Colouring:
    """Per-vertex colour indices; proper when no edge is monochromatic."""

    colours: tuple[int, ...]

    def num_colours(self) -> int:
        return max(self.colours) + 1 if self.colours else 0

    def is_proper_for(self, g: Graph, k: int | None = None) -> bool:
        if len(self.colours) != g.n:
            return False
        if any(c < 0 for c in self.colours):
            return False
        if k is not None and any(c >= k for c in self.colours):
            return False
        return all(self.colours[u] != self.colours[v] for u, v in g.edges())


def _greedy_clique(g: Graph) -> list[int]:
    clique: list[int] = []
    cmask = 0
    for v in sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v)):
        if g.adj[v] & cmask == cmask:
            clique.append(v)
            cmask |= 1 << v
    return clique


def clique_lower_bound(g: Graph) -> int:
    """Size of a greedily grown clique; a lower bound for the clique number."""
    return len(_greedy_clique(g))


def k_colourable(g: Graph, k: int) -> Colouring | None:
    """A proper k-colouring when one exists, else None.  Exact.

    k = 0 with a nonempty vertex set is not colourable, by convention.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = g.n
    if n == 0:
        return Colouring(())
    if k == 0:
        return None
    if k >= n:
        return Colouring(tuple(range(n)))
    adj = g.adj

    clique = _greedy_clique(g)
    if len(clique) > k:
        return None
    colours = [-1] * n
    forb = [0] * n  # bitmask of colours unavailable at each vertex
    for i, v in enumerate(clique):
        colours[v] = i
        bit = 1 << i
        for u in bits(adj[v]):
            forb[u] |= bit

    def pick() -> int:
        best, best_key = -1, (-1, -1)
        for v in range(n):
            if colours[v] < 0:
                key = (forb[v].bit_count(), adj[v].bit_count())
                if key > best_key:
                    best, best_key = v, key
        return best

    def rec(uncoloured: int, used: int) -> bool:
        if uncoloured == 0:
            return True
        v = pick()
        f = forb[v]
        top = used if used < k else k - 1
        for c in range(top + 1):
            if (f >> c) & 1:
                continue
            bit = 1 << c
            colours[v] = c
            touched = []
            for u in bits(adj[v]):
                if colours[u] < 0 and not forb[u] & bit:
                    forb[u] |= bit
                    touched.append(u)
            if rec(uncoloured - 1, max(used, c + 1)):
                return True
            colours[v] = -1
            for u in touched:
                forb[u] ^= bit
        return False

    if rec(n - len(clique), len(clique)):
        return Colouring(tuple(colours))
    return None


def chromatic_number(g: Graph) -> int:
    """Least k admitting a proper k-colouring; 0 only for the empty graph."""
    if g.n == 0:
        return 0
    for k in range(max(1, clique_lower_bound(g)), g.n + 1):
        if k_colourable(g, k) is not None:
            return k
    raise AssertionError("unreachable: every graph is n-colourable")


def independence_number(g: Graph) -> int:
    """Exact maximum independent set size, by branch and bound."""
    n = g.n
    if n == 0:
        return 0
    adj = g.adj
    best = 0

    def rec(cand: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if cand == 0:
            best = size
            return
        pick, pick_deg = -1, -1
        for v in bits(cand):
            d = (adj[v] & cand).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        rec(cand & ~adj[pick] & ~(1 << pick), size + 1)
        if pick_deg > 0:
            rec(cand & ~(1 << pick), size)

    rec(g.full_mask, 0)
    return best
