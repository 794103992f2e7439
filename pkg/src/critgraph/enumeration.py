"""Exhaustive isomorph-free generation of the k-vertex-critical graphs inside
a hereditary H-free family, plus an independent brute-force oracle.

Candidates grow one vertex at a time from K1 (or from user seeds).  A child
survives, in check order:

* degree deadline - a vertex that cannot reach degree k-1 before the order
  cap kills the branch, since every vertex of a k-vertex-critical graph has
  degree at least k-1 and existing non-edges are permanent.  Vertices whose
  deficit equals the remaining budget are forced into every new
  neighbourhood, so the subset enumeration only walks the free vertices;
* family filter - only embeddings through the new vertex can introduce a
  forbidden pattern, because the class is hereditary and the parent was
  clean.  Clique patterns and the isolated-vertex case of disconnected
  patterns reduce to precomputed bitmask tests against the parent, so most
  subsets are rejected before the child graph is even built;
* chromatic deadline - the chromatic number grows by at most one per added
  vertex, so a candidate needs chi + (vertices left) >= k.  Each frontier
  entry carries one proper colouring of itself; when some colour class
  avoids the new neighbourhood the child's chromatic number is unchanged and
  no solver call is needed;
* canonical-augmentation acceptance - a child is kept exactly when deleting
  its canonical last vertex returns this parent's canonical form, which
  makes every isomorphism class get expanded exactly once with no global
  seen-set.

A candidate whose chromatic number reaches k is an emission candidate: it is
re-verified in full (criticality and family membership) and never expanded,
because any proper supergraph would contain it as a proper induced subgraph
of chromatic number k and therefore cannot be vertex-critical.  Comparable
pairs never reject a growing candidate (they can still be fixed by later
vertices); they cut a branch only when no future vertex can fix them: at the
cap, or one below the cap when some vertex is dominated in one pair and
dominating in another.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .coloring import Colouring, chromatic_number, k_colourable
from .criticality import _cliques_of_size, comparable_masks, comparable_pair, is_k_vertex_critical
from .graphs import MAX_ORDER, Graph, add_vertex, emit_graph6, induced_subgraph, relabel
from .iso import (
    ALL_GRAPHS_MAX,
    augmentation_accepted,
    canonical_order,
    graph_levels,
)
from .search import find_induced, induced_copy_masks, is_family_member

PRUNE_CAUSES = (
    "family",
    "degree",
    "chromatic",
    "comparable",
    "disconnected",
    "duplicate",
    "non_canonical",
    "not_critical",
)


@dataclass(frozen=True)
class EnumerationConfig:
    """Target criticality k, forbidden induced patterns, and the order cap."""

    k: int
    forbidden: tuple[Graph, ...]
    max_order: int
    prune_comparable: bool = True
    seed_graphs: tuple[Graph, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "forbidden", tuple(self.forbidden))
        object.__setattr__(self, "seed_graphs", tuple(self.seed_graphs))

    def validate(self) -> None:
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if self.max_order < self.k:
            raise ValueError("max_order must be at least k so that K_k fits")
        if self.max_order > MAX_ORDER:
            raise ValueError(f"max_order exceeds the order cap {MAX_ORDER}")
        for pat in self.forbidden:
            if pat.n == 0:
                raise ValueError("forbidden patterns must be nonempty")
        for seed in self.seed_graphs:
            if seed.n == 0 or seed.n > self.max_order:
                raise ValueError("seed orders must lie in 1..max_order")
            if self.forbidden and not is_family_member(seed, self.forbidden):
                raise ValueError("seed graph is not a family member")


@dataclass
class SearchStats:
    expansions: int = 0
    children: int = 0
    emitted: int = 0
    pruned: dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class EnumerationReport:
    """found holds canonically labelled graphs sorted by (order, canonical form)."""

    found: tuple[Graph, ...]
    counts_by_order: dict[int, int]
    complete: bool
    stats: SearchStats


# Frontier entry: (graph, chromatic number, canonical form, colour-class masks).
_Entry = tuple[Graph, int, str, tuple[int, ...]]


def _is_clique(pat: Graph) -> bool:
    return pat.edge_count == pat.n * (pat.n - 1) // 2


def _colour_classes(col: Colouring) -> tuple[int, ...]:
    classes: dict[int, int] = {}
    for v, c in enumerate(col.colours):
        classes[c] = classes.get(c, 0) | (1 << v)
    return tuple(classes[c] for c in sorted(classes))


def _birth_checks(parent: Graph, forbidden: tuple[Graph, ...]):
    """Per-parent precomputation for the family-at-birth filter.

    Returns (mask_checks, generic_patterns): mask_checks are (masks, mode)
    pairs testable against the new neighbourhood alone; mode "subset" fires
    when some mask is inside S (clique case), "avoid" when some mask misses S
    entirely (a disconnected pattern's isolated vertex played by the new
    vertex).  generic_patterns still need the backtracking matcher on the
    built child; an "avoid" check is exact only for edgeless patterns, so
    other patterns with isolated vertices appear in both lists.
    """
    subset_checks: list[list[int]] = []
    avoid_checks: list[list[int]] = []
    generic: list[Graph] = []
    for pat in sorted(forbidden, key=lambda p: (not _is_clique(p), p.n)):
        if _is_clique(pat):
            masks = _cliques_of_size(parent, pat.n - 1)
            if masks:
                subset_checks.append(
                    [sum(1 << v for v in c) for c in masks]
                )
            continue
        isolated = [v for v in range(pat.n) if pat.degree(v) == 0]
        if isolated:
            q = induced_subgraph(pat, pat.full_mask & ~(1 << isolated[0]))
            qmasks = induced_copy_masks(parent, q)
            if qmasks:
                avoid_checks.append(qmasks)
            if pat.edge_count == 0:
                continue  # the avoid check is exact for edgeless patterns
        generic.append(pat)
    return subset_checks, avoid_checks, generic


def _expand_entry(entry: _Entry, cfg: EnumerationConfig):
    """Children and verified emissions of one candidate.

    Returns (frontier_children, emitted [(canon, graph)], prune counter).
    """
    g, chi, parent_canon, classes = entry
    k = cfg.k
    m = g.n
    remaining = cfg.max_order - (m + 1)
    stats: Counter[str] = Counter()
    children: list[_Entry] = []
    emitted: list[tuple[str, Graph]] = []
    stats["children"] += 1 << m

    # Degree deadline, encoded into the subset walk: vertices whose deficit
    # equals remaining+1 must be adjacent to the new vertex; a larger deficit
    # kills the whole expansion.
    forced = 0
    for v in range(m):
        deficit = k - 1 - g.degree(v)
        if deficit > remaining + 1:
            stats["degree"] += 1 << m
            return children, emitted, stats
        if deficit == remaining + 1:
            forced |= 1 << v
    free = g.full_mask & ~forced
    min_degree_new = k - 1 - remaining
    stats["degree"] += (1 << m) - (1 << free.bit_count())

    subset_checks, avoid_checks, generic = _birth_checks(g, cfg.forbidden)
    seen: set[str] = set()

    t = free
    while True:
        s = forced | t
        # ---- family fast paths: bit tests against the parent only ----
        if s.bit_count() < min_degree_new:
            stats["degree"] += 1
        else:
            violated = False
            for masks in subset_checks:
                for cm in masks:
                    if cm & ~s == 0:
                        violated = True
                        break
                if violated:
                    break
            if not violated:
                for masks in avoid_checks:
                    for qm in masks:
                        if qm & s == 0:
                            violated = True
                            break
                    if violated:
                        break
            if violated:
                stats["family"] += 1
            else:
                child = add_vertex(g, s)
                # isolated roles for the new vertex were covered by the
                # avoid-mask checks, so the matcher may skip them
                if generic and any(
                    find_induced(child, pat, require=m, allow_isolated_role=False)
                    is not None
                    for pat in generic
                ):
                    stats["family"] += 1
                else:
                    result = _process_clean_child(
                        child, s, entry, cfg, remaining, stats, seen
                    )
                    if result is not None:
                        kind, payload = result
                        if kind == "child":
                            children.append(payload)
                        else:
                            emitted.append(payload)
        if t == 0:
            break
        t = (t - 1) & free

    return children, emitted, stats


def _process_clean_child(child, s, entry, cfg, remaining, stats, seen):
    g, chi, parent_canon, classes = entry
    k = cfg.k
    m = g.n

    # chromatic step: reuse the parent colouring when a class avoids s
    child_classes = None
    for i, cm in enumerate(classes):
        if cm & s == 0:
            child_classes = classes[:i] + (cm | (1 << m),) + classes[i + 1 :]
            break
    if child_classes is not None:
        chi_c = chi
    else:
        col = k_colourable(child, chi)
        if col is not None:
            chi_c = chi
            child_classes = _colour_classes(col)
        else:
            chi_c = chi + 1
            child_classes = classes + (1 << m,)

    if chi_c >= k:
        # emission candidate; never expanded
        if min(child.degree(v) for v in range(child.n)) < k - 1:
            stats["degree"] += 1
            return None
        if cfg.prune_comparable and comparable_pair(child) is not None:
            stats["comparable"] += 1
            return None
        if not child.is_connected():
            stats["disconnected"] += 1
            return None
        order = canonical_order(child)
        cg = relabel(child, order)
        c6 = emit_graph6(cg)
        if c6 in seen:
            stats["duplicate"] += 1
            return None
        seen.add(c6)
        if not augmentation_accepted(child, parent_canon, order):
            stats["non_canonical"] += 1
            return None
        if cfg.forbidden and not is_family_member(child, cfg.forbidden):
            stats["family"] += 1
            return None
        if is_k_vertex_critical(child, k):
            stats["emitted"] += 1
            return "emit", (c6, cg)
        stats["not_critical"] += 1
        return None

    if chi_c + remaining < k:
        stats["chromatic"] += 1
        return None
    if cfg.prune_comparable and remaining == 1:
        dominated, dominating = comparable_masks(child)
        if dominated & dominating:
            stats["comparable"] += 1
            return None
    order = canonical_order(child)
    cg = relabel(child, order)
    c6 = emit_graph6(cg)
    if c6 in seen:
        stats["duplicate"] += 1
        return None
    seen.add(c6)
    if not augmentation_accepted(child, parent_canon, order):
        stats["non_canonical"] += 1
        return None
    return "child", (child, chi_c, c6, child_classes)


def _expand_batch(args):
    entries, cfg = args
    return [_expand_entry(e, cfg) for e in entries]


def _map_expansions(entries: list[_Entry], cfg: EnumerationConfig, workers: int):
    if workers <= 1 or len(entries) < 2 * workers:
        return [_expand_entry(e, cfg) for e in entries]
    chunk = max(1, (len(entries) + workers - 1) // workers)
    batches = [(entries[i : i + chunk], cfg) for i in range(0, len(entries), chunk)]
    try:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            out = []
            for batch_result in pool.map(_expand_batch, batches):
                out.extend(batch_result)
            return out
    except (OSError, PermissionError):  # no subprocess support: degrade serially
        return [_expand_entry(e, cfg) for e in entries]


def _entry_for(g: Graph) -> _Entry:
    order = canonical_order(g)
    c6 = emit_graph6(relabel(g, order))
    chi = chromatic_number(g)
    col = k_colourable(g, chi)
    assert col is not None
    return (g, chi, c6, _colour_classes(col))


def expand(g: Graph, cfg: EnumerationConfig) -> list[Graph]:
    """Surviving expandable children of one candidate.

    A candidate whose chromatic number already reached cfg.k is never
    expanded and yields []; its possible emission is the enumerator's job.
    """
    cfg.validate()
    if chromatic_number(g) >= cfg.k:
        return []
    children, _, _ = _expand_entry(_entry_for(g), cfg)
    return [c[0] for c in children]


def enumerate_critical(cfg: EnumerationConfig, workers: int = 1) -> EnumerationReport:
    """All k-vertex-critical family members up to cfg.max_order, one per class.

    Soundness is unconditional: every emitted graph is re-verified.  The
    report is complete for orders <= max_order; ``complete=True`` additionally
    records that the frontier emptied strictly below the cap, i.e. the run
    terminated with no candidates left to extend under its pruning horizon.
    """
    cfg.validate()
    k = cfg.k
    stats: Counter[str] = Counter()
    emitted: dict[str, Graph] = {}
    buckets: dict[int, list[_Entry]] = {}

    roots = cfg.seed_graphs if cfg.seed_graphs else (Graph.from_edges(1, []),)
    seen_roots: set[str] = set()
    for seed in roots:
        order = canonical_order(seed)
        cg = relabel(seed, order)
        c6 = emit_graph6(cg)
        if c6 in seen_roots:
            continue
        seen_roots.add(c6)
        chi = chromatic_number(seed)
        if chi >= k:
            if (
                chi == k
                and (not cfg.forbidden or is_family_member(seed, cfg.forbidden))
                and is_k_vertex_critical(seed, k)
            ):
                emitted[c6] = cg
            continue
        col = k_colourable(seed, chi)
        assert col is not None
        buckets.setdefault(seed.n, []).append((seed, chi, c6, _colour_classes(col)))

    complete = False
    for m in range(1, cfg.max_order):
        entries = sorted(buckets.pop(m, []), key=lambda e: e[2])
        if not entries:
            if not any(order > m for order in buckets):
                complete = True
                break
            continue
        stats["expansions"] += len(entries)
        for children, emits, st in _map_expansions(entries, cfg, workers):
            stats.update(st)
            for c6, cg in emits:
                emitted.setdefault(c6, cg)
            for child_entry in children:
                buckets.setdefault(child_entry[0].n, []).append(child_entry)

    found = sorted(emitted.items(), key=lambda kv: (kv[1].n, kv[0]))
    counts = Counter(cg.n for _, cg in found)
    return EnumerationReport(
        found=tuple(cg for _, cg in found),
        counts_by_order=dict(sorted(counts.items())),
        complete=complete,
        stats=SearchStats(
            expansions=stats["expansions"],
            children=stats["children"],
            emitted=len(found),
            pruned={cause: stats[cause] for cause in PRUNE_CAUSES if stats[cause]},
        ),
    )


def brute_force_critical(k: int, forbidden: Sequence[Graph], n: int) -> list[Graph]:
    """Independent oracle: filter every graph of order <= n (n <= 8).

    Walks one representative per isomorphism class per order and applies the
    family and criticality definitions directly.
    """
    if n > ALL_GRAPHS_MAX:
        raise ValueError(f"brute force is limited to order <= {ALL_GRAPHS_MAX}")
    forbidden = tuple(forbidden)
    out: list[Graph] = []
    for level in graph_levels(n):
        for g in level:  # levels hold canonical labellings, sorted
            if forbidden and not is_family_member(g, forbidden):
                continue
            if g.n >= 1 and is_k_vertex_critical(g, k):
                out.append(g)
    out.sort(key=lambda g: (g.n, emit_graph6(g)))
    return out
