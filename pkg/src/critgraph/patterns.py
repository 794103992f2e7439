"""Named pattern graphs and parameterised families.

Every name resolves deterministically to one labelled graph.  Compositional
names are supported: ``"P3+2P2"`` is a path on three vertices plus two
disjoint edges, ``"co-gem"`` is ``P4+P1``, ``"K_5"`` and ``"K5"`` are both the
5-clique.  The order-4 catalog keeps its own fixed labellings so that
positionally-sourced embeddings can be cross-checked against it.
"""

from __future__ import annotations

import re

from .graphs import Graph, disjoint_union, complement


class PatternError(ValueError):
    """Unknown pattern name or invalid family parameters."""


def path(n: int) -> Graph:
    if n < 1:
        raise PatternError(f"path needs at least 1 vertex, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise PatternError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise PatternError(f"complete graph needs at least 1 vertex, got {n}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def wheel(n: int) -> Graph:
    """Cycle on ``n`` rim vertices plus a hub adjacent to all of them."""
    if n < 3:
        raise PatternError(f"wheel needs a rim of at least 3 vertices, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return Graph.from_edges(n + 1, edges)


def antihole(n: int) -> Graph:
    """Complement of the n-cycle, for odd n >= 5."""
    if n % 2 == 0 or n < 5:
        raise PatternError(f"antihole needs an odd order >= 5, got {n}")
    if n > 64:
        raise PatternError(f"antihole order {n} exceeds the cap 64")
    return complement(cycle(n))


_ATOMS: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "paw": (4, [(0, 1), (0, 2), (1, 2), (2, 3)]),
    "claw": (4, [(0, 1), (0, 2), (0, 3)]),
    "diamond": (4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    "bull": (5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
    "gem": (5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
    "co-gem": (5, [(0, 1), (1, 2), (2, 3)]),
    "house": (5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4)]),
}

_FAMILIES = {"p": path, "k": complete, "c": cycle, "w": wheel, "antihole": antihole}

_TERM_RE = re.compile(r"(\d*)([A-Za-z][A-Za-z-]*?)(\d*)")


def _realize_term(term: str) -> Graph:
    t = term.strip().replace("_", "").replace(" ", "")
    m = _TERM_RE.fullmatch(t)
    if m is None:
        raise PatternError(f"cannot parse pattern term {term!r}")
    count = int(m.group(1)) if m.group(1) else 1
    name = m.group(2).lower()
    if m.group(3):
        fam = _FAMILIES.get(name)
        if fam is None:
            raise PatternError(f"unknown graph family {m.group(2)!r}")
        base = fam(int(m.group(3)))
    else:
        key = "co-gem" if name == "cogem" else name
        if key not in _ATOMS:
            raise PatternError(f"unknown pattern name {term!r}")
        order, edges = _ATOMS[key]
        base = Graph.from_edges(order, edges)
    out = Graph.empty(0)
    for _ in range(count):
        out = disjoint_union(out, base)
    return out


def realize(spec: str) -> Graph:
    """Build the graph named by ``spec``.

    A spec is one or more ``+``-separated terms; each term is an optional
    repeat count followed by an atom name (paw, claw, diamond, bull, gem,
    co-gem, house) or a parameterised family (``P<n>``, ``K<n>``, ``C<n>``,
    ``W<n>``, ``antihole<n>``).
    """
    terms = [t for t in spec.split("+")]
    if not terms or not spec.strip():
        raise PatternError("empty pattern spec")
    out = Graph.empty(0)
    for term in terms:
        out = disjoint_union(out, _realize_term(term))
    if out.n == 0:
        raise PatternError(f"pattern {spec!r} has no vertices")
    return out


# Fixed labellings of the 11 order-4 graphs, in catalog order.
_ORDER4: list[tuple[str, list[tuple[int, int]]]] = [
    ("4P1", []),
    ("P2+2P1", [(0, 3)]),
    ("P3+P1", [(0, 3), (1, 3)]),
    ("2P2", [(0, 2), (1, 3)]),
    ("claw", [(0, 3), (1, 3), (2, 3)]),
    ("P4", [(0, 2), (0, 3), (1, 3)]),
    ("K3+P1", [(0, 2), (0, 3), (2, 3)]),
    ("paw", [(0, 2), (0, 3), (1, 3), (2, 3)]),
    ("C4", [(0, 2), (0, 3), (1, 2), (1, 3)]),
    ("diamond", [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    ("K4", [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
]


def catalog_order4() -> list[Graph]:
    """The 11 pairwise non-isomorphic graphs of order four, fixed labellings."""
    return [Graph.from_edges(4, edges) for _, edges in _ORDER4]


def catalog_entries() -> list[tuple[str, Graph]]:
    """Named catalog: the order-4 graphs plus the other named atoms."""
    out = [(name, Graph.from_edges(4, edges)) for name, edges in _ORDER4]
    for name in ("bull", "gem", "co-gem", "house"):
        order, edges = _ATOMS[name]
        out.append((name, Graph.from_edges(order, edges)))
    out.append(("P5", path(5)))
    out.append(("C5", cycle(5)))
    out.append(("W5", wheel(5)))
    out.append(("paw+P1", realize("paw+P1")))
    return out
