"""Certifying k-colourability for families with a known finite list of
(k+1)-vertex-critical graphs.

Every verdict ships a witness that can be re-checked against the input graph
alone: a proper k-colouring, an embedding of a listed (k+1)-vertex-critical
graph, or an embedding of a forbidden pattern showing the input is outside
the family.  Lists are re-verified on load; nothing on disk is trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Sequence, Union

from .coloring import Colouring, k_colourable
from .criticality import is_k_vertex_critical
from .graphs import Graph, induced_subgraph, iter_graph6, mask_of
from .iso import canonical_form, canonical_graph
from .patterns import realize
from .search import Embedding, FamilyViolation, family_violation, find_induced


class CriticalListError(ValueError):
    """A critical list failed its load-time verification."""


class IncompleteCriticalListError(RuntimeError):
    """The exact solver found no colouring and no listed graph embeds.

    This is surfaced, never silently repaired: it falsifies the claim that
    the list is complete for its family.
    """

    def __init__(self, g: Graph, k: int):
        super().__init__(
            f"graph on {g.n} vertices is not {k}-colourable but contains no "
            f"listed {k + 1}-vertex-critical graph; the critical list is incomplete"
        )
        self.graph = g
        self.k = k


class FamilyViolationError(ValueError):
    """Input to a family-restricted operation is outside the family."""

    def __init__(self, violation: FamilyViolation):
        super().__init__(
            f"input contains forbidden pattern #{violation.pattern_index} "
            f"at vertices {violation.embedding.vertices}"
        )
        self.violation = violation


class ColouringBoundFalsified(RuntimeError):
    """A guaranteed colouring bound failed; must never fire."""


@dataclass(frozen=True)
class Colourable:
    colouring: Colouring


@dataclass(frozen=True)
class NotColourable:
    embedding: Embedding  # of a (k+1)-vertex-critical graph


@dataclass(frozen=True)
class NotInFamily:
    violation: FamilyViolation


Certificate = Union[Colourable, NotColourable, NotInFamily]


@dataclass(frozen=True)
class CriticalList:
    """The (k+1)-vertex-critical graphs of a family, for k-colourability checks.

    Graphs are stored canonically labelled and sorted by (order, canonical
    form), so certificates always report a smallest embedded critical graph.
    """

    k: int
    forbidden: tuple[Graph, ...]
    graphs: tuple[Graph, ...]
    provenance: str

    @staticmethod
    def build(
        k: int,
        forbidden: Sequence[Graph],
        graphs: Sequence[Graph],
        provenance: str,
    ) -> "CriticalList":
        forbidden = tuple(forbidden)
        entries: list[tuple[int, str, Graph]] = []
        seen: set[str] = set()
        for g in graphs:
            if forbidden and family_violation(g, forbidden) is not None:
                raise CriticalListError(
                    f"listed graph on {g.n} vertices is not a family member"
                )
            if not is_k_vertex_critical(g, k + 1):
                raise CriticalListError(
                    f"listed graph on {g.n} vertices is not {k + 1}-vertex-critical"
                )
            cg = canonical_graph(g)
            c6 = canonical_form(cg)
            if c6 in seen:
                raise CriticalListError(f"duplicate listed graph {c6!r}")
            seen.add(c6)
            entries.append((cg.n, c6, cg))
        entries.sort(key=lambda t: (t[0], t[1]))
        return CriticalList(k, forbidden, tuple(g for _, _, g in entries), provenance)


def shipped_critical_list(k: int) -> CriticalList:
    """The shipped co-gem-free lists: k = 2 (two graphs) and k = 3 (nine)."""
    if k not in (2, 3):
        raise CriticalListError(f"no shipped co-gem-free critical list for k={k}")
    name = f"{k + 1}critical-cogem.g6"
    text = resources.files(__package__).joinpath("data", name).read_text("ascii")
    graphs = list(iter_graph6(text.splitlines()))
    return CriticalList.build(k, (realize("co-gem"),), graphs, "shipped")


def certify_colourable(g: Graph, k: int, clist: CriticalList) -> Certificate:
    """Decide k-colourability of a family member with a checkable certificate.

    Raises IncompleteCriticalListError when the exact solver refutes
    k-colourability but no listed critical graph embeds.
    """
    if clist.k != k:
        raise ValueError(f"critical list targets k={clist.k}, not k={k}")
    violation = family_violation(g, clist.forbidden)
    if violation is not None:
        return NotInFamily(violation)
    for crit in clist.graphs:  # smallest order first, canonical tie-break
        emb = find_induced(g, crit)
        if emb is not None:
            return NotColourable(emb)
    colouring = k_colourable(g, k)
    if colouring is None:
        raise IncompleteCriticalListError(g, k)
    return Colourable(colouring)


def verify_certificate(g: Graph, k: int, cert: Certificate) -> tuple[bool, str]:
    """Re-check a certificate against the input graph alone.

    Returns (ok, reason); reason is "ok" on success.
    """
    if isinstance(cert, Colourable):
        col = cert.colouring
        if len(col.colours) != g.n:
            return False, "colouring length does not match the graph"
        if any(c < 0 or c >= k for c in col.colours):
            return False, f"colour index outside 0..{k - 1}"
        for u, v in g.edges():
            if col.colours[u] == col.colours[v]:
                return False, f"monochromatic edge ({u}, {v})"
        return True, "ok"
    if isinstance(cert, NotColourable):
        emb = cert.embedding
        if not emb.is_valid_in(g):
            return False, "embedding does not induce the claimed subgraph"
        sub = induced_subgraph(g, mask_of(emb.vertices))
        if not is_k_vertex_critical(sub, k + 1):
            return False, f"embedded subgraph is not {k + 1}-vertex-critical"
        return True, "ok"
    if isinstance(cert, NotInFamily):
        if not cert.violation.embedding.is_valid_in(g):
            return False, "family-violation embedding is invalid"
        return True, "ok"
    return False, "unknown certificate type"


def colour_cogem_k4free(g: Graph) -> Colouring:
    """A proper 4-colouring of a (co-gem, K4)-free graph.

    Existence is guaranteed for the family; a solver failure would falsify
    that bound and raises ColouringBoundFalsified.
    """
    violation = family_violation(g, (realize("co-gem"), realize("K4")))
    if violation is not None:
        raise FamilyViolationError(violation)
    colouring = k_colourable(g, 4)
    if colouring is None:
        raise ColouringBoundFalsified(
            f"(co-gem, K4)-free graph on {g.n} vertices refused a 4-colouring"
        )
    return colouring
