"""Shared test utilities: random graph generators and small brute-force
oracles kept independent of the library's own algorithms."""

from __future__ import annotations

import random
from itertools import combinations, permutations

from critgraph import Graph


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_permutation(rng: random.Random, n: int) -> list[int]:
    order = list(range(n))
    rng.shuffle(order)
    return order


def encode_graph6_reference(g: Graph) -> str:
    """Independent graph6 encoder following the published format: byte n+63,
    then upper-triangle bits column-major, 6 per byte, each +63, zero pad."""
    bitstring = []
    for j in range(1, g.n):
        for i in range(j):
            bitstring.append("1" if g.has_edge(i, j) else "0")
    while len(bitstring) % 6:
        bitstring.append("0")
    chunks = ["".join(bitstring[i : i + 6]) for i in range(0, len(bitstring), 6)]
    return chr(g.n + 63) + "".join(chr(int(c, 2) + 63) for c in chunks)


def naive_isomorphic(g: Graph, h: Graph) -> bool:
    """All-permutations isomorphism check."""
    if g.n != h.n:
        return False
    verts = range(g.n)
    for perm in permutations(verts):
        if all(
            g.has_edge(u, v) == h.has_edge(perm[u], perm[v])
            for u in verts
            for v in verts
            if u < v
        ):
            return True
    return False


def naive_has_induced(host: Graph, pattern: Graph) -> bool:
    """Subset enumeration + permutation check for induced containment."""
    if pattern.n > host.n:
        return False
    for subset in combinations(range(host.n), pattern.n):
        for perm in permutations(subset):
            if all(
                pattern.has_edge(i, j) == host.has_edge(perm[i], perm[j])
                for i in range(pattern.n)
                for j in range(i + 1, pattern.n)
            ):
                return True
    return False


def naive_chromatic(g: Graph) -> int:
    """Exact chromatic number by subset dynamic programming: chi(S) is one
    plus the minimum over maximal independent subsets of S."""
    n = g.n
    if n == 0:
        return 0
    full = (1 << n) - 1
    independent = [False] * (full + 1)
    for s in range(full + 1):
        low = s & -s
        if s == 0:
            independent[s] = True
            continue
        v = low.bit_length() - 1
        rest = s ^ low
        independent[s] = independent[rest] and not (g.adj[v] & rest)
    best = [0] + [n + 1] * full
    for s in range(1, full + 1):
        # iterate over subsets t of s; colour class must be independent
        t = s
        while t:
            if independent[t] and best[s ^ t] + 1 < best[s]:
                best[s] = best[s ^ t] + 1
            t = (t - 1) & s
    return best[full]


def naive_independence(g: Graph) -> int:
    best = 0
    for s in range(1 << g.n):
        ok = True
        for u in range(g.n):
            if (s >> u) & 1 and g.adj[u] & s:
                ok = False
                break
        if ok:
            best = max(best, s.bit_count())
    return best
