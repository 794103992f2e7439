"""Small simple graphs stored as per-vertex adjacency bitmasks, plus the
graph6 line codec.

A vertex is an index in ``range(n)`` and a vertex set is an ``int`` bitmask,
so adjacency tests and set algebra are single integer operations.  The order
cap of 64 keeps every adjacency row inside one machine word, which is what
makes the hot loops of the enumerator and the subgraph matcher branch-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 64
GRAPH6_MAX_ORDER = 62


class GraphOrderError(ValueError):
    """A construction would exceed a vertex-count cap."""


class Graph6Error(ValueError):
    """Base class for graph6 codec failures."""


class Graph6ByteError(Graph6Error):
    """graph6 word contains a byte outside the printable range [63, 126]."""


class Graph6LengthError(Graph6Error):
    """graph6 word has the wrong number of payload bytes for its order."""


class Graph6PaddingError(Graph6Error):
    """graph6 word has nonzero bits in its zero-padding tail."""


class Graph6OrderError(Graph6Error):
    """Order outside the supported short-form range (0..62)."""


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with the given vertex indices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbours of ``v``.  Instances are values:
    hashable, comparable, and safe to share between threads or processes.
    """

    n: int
    adj: tuple[int, ...]

    @staticmethod
    def empty(n: int) -> "Graph":
        if not 0 <= n <= MAX_ORDER:
            raise GraphOrderError(f"order {n} outside 0..{MAX_ORDER}")
        return Graph(n, (0,) * n)

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_ORDER:
            raise GraphOrderError(f"order {n} outside 0..{MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    yield (u, v)
                row >>= 1
                v += 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        reached = 1
        while True:
            grown = reached
            for v in bits(reached):
                grown |= self.adj[v]
            if grown == reached:
                return reached == self.full_mask
            reached = grown

    def validate(self) -> None:
        """Raise ValueError unless the adjacency invariants hold."""
        if not 0 <= self.n <= MAX_ORDER:
            raise ValueError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match order")
        full = self.full_mask
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits at positions >= n")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric edge ({v}, {u})")

    def __repr__(self) -> str:
        if self.n <= GRAPH6_MAX_ORDER:
            return f"Graph(g6={emit_graph6(self)!r})"
        return f"Graph(n={self.n}, m={self.edge_count})"


def complement(g: Graph) -> Graph:
    """Flip every non-loop adjacency bit."""
    full = g.full_mask
    return Graph(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Place ``h`` after ``g`` with no cross edges."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise GraphOrderError(f"union order {n} exceeds {MAX_ORDER}")
    shifted = tuple(row << g.n for row in h.adj)
    return Graph(n, g.adj + shifted)


def induced_subgraph(g: Graph, vertex_mask: int) -> Graph:
    """Subgraph induced by the set bits, relabelled by increasing old index."""
    if vertex_mask & ~g.full_mask:
        raise ValueError("vertex set has bits outside the graph")
    keep = list(bits(vertex_mask))
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = g.adj[v] & vertex_mask
        rows.append(mask_of(pos[u] for u in bits(row)))
    return Graph(len(keep), tuple(rows))


def add_vertex(g: Graph, nbrs: int) -> Graph:
    """New vertex with index ``g.n`` adjacent exactly to the set bits of ``nbrs``."""
    if g.n >= MAX_ORDER:
        raise GraphOrderError(f"cannot grow past {MAX_ORDER} vertices")
    if nbrs & ~g.full_mask:
        raise ValueError("neighbour set has bits outside the graph")
    rows = [row | (1 << g.n) if (nbrs >> v) & 1 else row for v, row in enumerate(g.adj)]
    rows.append(nbrs)
    return Graph(g.n + 1, tuple(rows))


def without_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.full_mask & ~(1 << v))


def relabel(g: Graph, order: Iterable[int]) -> Graph:
    """Relabelled copy where new vertex ``i`` is old vertex ``order[i]``."""
    seq = tuple(order)
    if sorted(seq) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    inv = [0] * g.n
    for i, v in enumerate(seq):
        inv[v] = i
    rows = []
    for v in seq:
        rows.append(mask_of(inv[u] for u in bits(g.adj[v])))
    return Graph(g.n, tuple(rows))


# --------------------------------------------------------------------------
# graph6 codec (short form only: 0 <= n <= 62)
#
# Word layout: one byte n+63, then the upper-triangle adjacency bits in
# column-major order (0,1),(0,2),(1,2),(0,3),... packed 6 per byte, each
# 6-bit group offset by 63, with zero padding in the final byte.
# --------------------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Decode a one-line short-form graph6 word."""
    word = text.strip()
    if not word:
        raise Graph6LengthError("empty graph6 word")
    try:
        data = word.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6ByteError(f"non-ASCII character in graph6 word: {word!r}") from exc
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6ByteError(f"byte {b} outside the graph6 range [63, 126]")
    if data[0] == 126:
        raise Graph6OrderError("long-form graph6 (order > 62) is not supported")
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 != need:
        raise Graph6LengthError(
            f"expected {need} payload bytes for order {n}, got {len(data) - 1}"
        )
    rows = [0] * n
    i, j = 0, 1
    idx = 0
    for byte in data[1:]:
        group = byte - 63
        for shift in (5, 4, 3, 2, 1, 0):
            bit = (group >> shift) & 1
            if idx < nbits:
                if bit:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise Graph6PaddingError("nonzero padding bits in graph6 word")
            idx += 1
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    """Encode as a short-form graph6 word (zero padding, bit-exact round trip)."""
    if g.n > GRAPH6_MAX_ORDER:
        raise Graph6OrderError(f"order {g.n} exceeds the short-form cap {GRAPH6_MAX_ORDER}")
    out = [g.n + 63]
    acc = 0
    nb = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nb += 1
            if nb == 6:
                out.append(acc + 63)
                acc, nb = 0, 0
    if nb:
        out.append((acc << (6 - nb)) + 63)
    return bytes(out).decode("ascii")


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse graph6 lines, skipping blanks and ``>>`` header lines."""
    for line in lines:
        s = line.strip()
        if not s or s.startswith(">>"):
            continue
        yield parse_graph6(s)


def read_graph6_file(path: str) -> list[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        return list(iter_graph6(fh))
