"""Executable structural checks: antichain bounds on set families,
consequence checks for enumerated critical graphs, and census slices for the
colourability conjectures.

The central combinatorial fact used here is Sperner's bound: a family of
subsets of an n-set contains no antichain larger than C(n, floor(n/2)).
Applied to the neighbourhood traces of an independent set inside a
vertex-critical graph, it forces large sets of trace-distinct mixed vertices,
which is what the structural consequence checks exercise.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .coloring import chromatic_number, independence_number
from .criticality import is_k_vertex_critical
from .enumeration import EnumerationConfig, EnumerationReport, enumerate_critical
from .graphs import Graph, bits
from .iso import canonical_form
from .patterns import antihole, complete, realize
from .search import find_induced, is_family_member, mixed_vertices

MAX_ANTICHAIN_MEMBERS = 20


class PreconditionError(ValueError):
    """A consequence check was called on input outside its contract."""


@dataclass(frozen=True)
class SetFamily:
    """Subsets of range(ground_size), each a bitmask."""

    ground_size: int
    members: tuple[int, ...]
    allow_duplicates: bool = False

    def __post_init__(self) -> None:
        full = (1 << self.ground_size) - 1
        for m in self.members:
            if m & ~full:
                raise ValueError("member has bits outside the ground set")
        if not self.allow_duplicates and len(set(self.members)) != len(self.members):
            raise ValueError("duplicate members (pass allow_duplicates=True)")


def sperner_bound(n: int) -> int:
    """Central binomial coefficient C(n, floor(n/2))."""
    if not 0 <= n <= 62:
        raise ValueError(f"n={n} outside the supported range 0..62")
    return comb(n, n // 2)


def max_antichain(f: SetFamily) -> int:
    """Exact size of the largest antichain (no member containing another).

    Reduces to a maximum independent set in the comparability graph of the
    members under inclusion; limited to 20 members.
    """
    m = len(f.members)
    if m > MAX_ANTICHAIN_MEMBERS:
        raise ValueError(f"family has {m} members, limit is {MAX_ANTICHAIN_MEMBERS}")
    edges = []
    for i in range(m):
        for j in range(i + 1, m):
            a, b = f.members[i], f.members[j]
            if a & ~b == 0 or b & ~a == 0:
                edges.append((i, j))
    return independence_number(Graph.from_edges(m, edges))


def mixed_trace_classes(g: Graph, s: int) -> list[int]:
    """One representative (lowest index) per neighbourhood trace on ``s``
    among the vertices mixed on ``s``."""
    reps: dict[int, int] = {}
    for v in bits(mixed_vertices(g, s)):
        trace = g.adj[v] & s
        reps.setdefault(trace, v)
    return sorted(reps.values())


def neighbourhood_antichain_holds(g: Graph, s: int) -> bool:
    """For independent ``s`` in a vertex-critical graph, the neighbourhood
    traces {N(x) & U : x in s} over the mixed representatives U form an
    antichain.  Returns whether that holds for this input."""
    umask = 0
    for v in mixed_trace_classes(g, s):
        umask |= 1 << v
    traces = [g.adj[x] & umask for x in bits(s)]
    for i in range(len(traces)):
        for j in range(len(traces)):
            if i != j and traces[i] & ~traces[j] == 0:
                return False
    return True


def _require_critical_member(g: Graph, k: int, forbidden: tuple[Graph, ...]) -> None:
    if not is_family_member(g, forbidden):
        raise PreconditionError("graph is not a member of the required family")
    if not is_k_vertex_critical(g, k):
        raise PreconditionError(f"graph is not {k}-vertex-critical")


def check_p3p1_freeness(g: Graph, k: int, c: int) -> bool:
    """For a k-vertex-critical (co-gem, P5, P3+cP2)-free graph, check that it
    contains no induced P3 + c'P1 with c' = C(kc, floor(kc/2))."""
    if c < 0:
        raise PreconditionError("c must be nonnegative")
    family = (realize("co-gem"), realize("P5"), realize(f"P3+{c}P2"))
    _require_critical_member(g, k, family)
    c_prime = sperner_bound(k * c)
    if 3 + c_prime > g.n:
        return True
    return find_induced(g, realize(f"P3+{c_prime}P1")) is None


def check_p3_2p1_freeness(g: Graph) -> bool:
    """For a vertex-critical (co-gem, paw+P1)-free graph, check that it
    contains no induced P3 + 2P1."""
    family = (realize("co-gem"), realize("paw+P1"))
    _require_critical_member(g, chromatic_number(g), family)
    return find_induced(g, realize("P3+2P1")) is None


def conjecture_slice(k: int, max_order: int, workers: int = 1) -> EnumerationReport:
    """Bounded-order census for the odd-antihole colourability conjecture.

    Enumerates the (k+1)-vertex-critical graphs that are co-gem-free, free of
    every odd antihole on 5..2k-5 vertices, and K_k-free.  An empty census
    supports the conjecture that such graphs are k-colourable on this slice;
    the report's ``complete`` flag is passed through verbatim.
    """
    if k < 4:
        raise ValueError("the conjecture slice needs k >= 4")
    forbidden = [realize("co-gem")]
    forbidden.extend(antihole(j) for j in range(5, 2 * k - 4, 2))
    forbidden.append(complete(k))
    cfg = EnumerationConfig(k=k + 1, forbidden=tuple(forbidden), max_order=max_order)
    return enumerate_critical(cfg, workers=workers)


def bull_equivalence(k: int, max_order: int, workers: int = 1) -> bool:
    """Whether the k-vertex-critical (co-gem, bull)-free and (P3+P1)-free
    censuses agree as isomorphism-class sets up to max_order."""
    if k > 6:
        raise ValueError("the equivalence is only claimed for k <= 6")
    left = enumerate_critical(
        EnumerationConfig(k=k, forbidden=(realize("co-gem"), realize("bull")), max_order=max_order),
        workers=workers,
    )
    right = enumerate_critical(
        EnumerationConfig(k=k, forbidden=(realize("P3+P1"),), max_order=max_order),
        workers=workers,
    )
    return {canonical_form(g) for g in left.found} == {
        canonical_form(g) for g in right.found
    }
