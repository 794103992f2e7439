import pytest

from critgraph import (
    EnumerationConfig,
    brute_force_critical,
    canonical_form,
    complement,
    enumerate_critical,
    expand,
    is_family_member,
    is_k_vertex_critical,
    realize,
)
from critgraph.criticality import comparable_pair
from critgraph.patterns import complete, cycle, wheel


def _forms(graphs):
    return {canonical_form(g) for g in graphs}


def test_config_validation():
    with pytest.raises(ValueError):
        EnumerationConfig(k=1, forbidden=(), max_order=5).validate()
    with pytest.raises(ValueError):
        EnumerationConfig(k=4, forbidden=(), max_order=3).validate()
    from critgraph import Graph

    with pytest.raises(ValueError):
        EnumerationConfig(k=3, forbidden=(Graph.empty(0),), max_order=6).validate()
    with pytest.raises(ValueError):
        EnumerationConfig(
            k=3, forbidden=(realize("co-gem"),), max_order=6,
            seed_graphs=(realize("co-gem"),),
        ).validate()


def test_brute_force_small_censuses():
    got = brute_force_critical(3, [], 5)
    assert _forms(got) == _forms([complete(3), cycle(5)])
    got = brute_force_critical(4, [realize("co-gem")], 6)
    assert _forms(got) == _forms([complete(4), wheel(5)])
    with pytest.raises(ValueError):
        brute_force_critical(3, [], 9)


def test_brute_force_5critical_cogem_order7():
    got = brute_force_critical(5, [realize("co-gem")], 7)
    assert [g.n for g in got] == [5, 7]
    assert canonical_form(got[0]) == canonical_form(complete(5))


def test_enumerate_3critical_cogem():
    cfg = EnumerationConfig(k=3, forbidden=(realize("co-gem"),), max_order=8)
    rep = enumerate_critical(cfg)
    assert _forms(rep.found) == _forms([complete(3), cycle(5)])
    assert rep.counts_by_order == {3: 1, 5: 1}
    assert sum(rep.counts_by_order.values()) == len(rep.found)


def test_enumerate_report_soundness_invariants():
    cfg = EnumerationConfig(k=4, forbidden=(realize("co-gem"),), max_order=7)
    rep = enumerate_critical(cfg)
    for g in rep.found:
        assert is_k_vertex_critical(g, 4)
        assert is_family_member(g, cfg.forbidden)
        assert comparable_pair(g) is None
        assert min(g.degree(v) for v in range(g.n)) >= 3
    forms = [canonical_form(g) for g in rep.found]
    assert len(set(forms)) == len(forms)
    # sorted by (order, canonical form)
    assert [(g.n, f) for g, f in zip(rep.found, forms)] == sorted(
        (g.n, f) for g, f in zip(rep.found, forms)
    )


@pytest.mark.parametrize(
    "k,family",
    [
        (3, ("co-gem",)),
        (4, ("co-gem",)),
        (4, ("co-gem", "K4")),
        (4, ("P3+P1",)),
    ],
)
def test_enumerate_matches_brute_force_order6(k, family):
    forbidden = tuple(realize(n) for n in family)
    cfg = EnumerationConfig(k=k, forbidden=forbidden, max_order=6)
    rep = enumerate_critical(cfg)
    assert _forms(rep.found) == _forms(brute_force_critical(k, forbidden, 6))


def test_enumerate_prune_toggle_equivalence():
    forbidden = (realize("co-gem"),)
    on = enumerate_critical(
        EnumerationConfig(k=4, forbidden=forbidden, max_order=7, prune_comparable=True)
    )
    off = enumerate_critical(
        EnumerationConfig(k=4, forbidden=forbidden, max_order=7, prune_comparable=False)
    )
    assert _forms(on.found) == _forms(off.found)


def test_enumerate_deterministic_across_workers():
    cfg = EnumerationConfig(k=4, forbidden=(realize("co-gem"),), max_order=7)
    seq = enumerate_critical(cfg, workers=1)
    par = enumerate_critical(cfg, workers=2)
    assert [canonical_form(g) for g in seq.found] == [
        canonical_form(g) for g in par.found
    ]
    assert seq.counts_by_order == par.counts_by_order
    assert seq.stats == par.stats


def test_enumerate_with_seed():
    # seeding with K4 still finds the clique chain upward
    cfg = EnumerationConfig(
        k=5, forbidden=(realize("co-gem"),), max_order=6, seed_graphs=(complete(4),)
    )
    rep = enumerate_critical(cfg)
    assert _forms(rep.found) == _forms([complete(5)])


def test_enumerate_complete_flag_on_closed_family():
    # forbidding 2P1 leaves only complete graphs; K3 is found and the
    # frontier then empties well below the cap
    cfg = EnumerationConfig(k=3, forbidden=(realize("2P1"),), max_order=10)
    rep = enumerate_critical(cfg)
    assert _forms(rep.found) == _forms([complete(3)])
    assert rep.complete


def test_expand_examples():
    cfg = EnumerationConfig(k=3, forbidden=(realize("co-gem"),), max_order=6)
    children = expand(complete(1), cfg)
    assert len(children) == 2
    assert sorted(c.edge_count for c in children) == [0, 1]
    # chromatic number already at k: emitted by the enumerator, never expanded
    cfg4 = EnumerationConfig(k=4, forbidden=(realize("co-gem"),), max_order=8)
    assert expand(complete(4), cfg4) == []
    for child in expand(cycle(5), cfg4):
        assert is_family_member(child, cfg4.forbidden)
        assert child.n == 6
