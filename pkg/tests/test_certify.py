import random

import pytest

from critgraph import (
    Colourable,
    CriticalList,
    FamilyViolationError,
    IncompleteCriticalListError,
    NotColourable,
    NotInFamily,
    certify_colourable,
    colour_cogem_k4free,
    complement,
    disjoint_union,
    is_family_member,
    realize,
    shipped_critical_list,
    verify_certificate,
)
from critgraph.certify import CriticalListError
from critgraph.coloring import Colouring, chromatic_number
from critgraph.graphs import Graph
from critgraph.patterns import complete, cycle, path, wheel

from helpers import random_graph


COGEM = realize("co-gem")


def random_cogem_free(rng: random.Random, max_n: int) -> Graph:
    """Random co-gem-free graph: G(n, 1/2) rejection for small orders mixed
    with join/union compositions (joins preserve co-gem-freeness because the
    pattern is disconnected; unions stay safe when every part is P4-free)."""
    while True:
        if rng.random() < 0.5:
            g = random_graph(rng, rng.randint(1, max_n))
        else:
            g = _random_composition(rng, max_n)
        if g.n <= max_n and is_family_member(g, [COGEM]):
            return g


def _random_composition(rng: random.Random, max_n: int) -> Graph:
    atoms = [cycle(5), wheel(5), complete(rng.randint(1, 3)), Graph.empty(rng.randint(1, 3))]
    g = rng.choice(atoms)
    while g.n < max_n and rng.random() < 0.7:
        h = rng.choice(atoms)
        if g.n + h.n > max_n:
            break
        if rng.random() < 0.5:
            g = complement(disjoint_union(complement(g), complement(h)))  # join
        else:
            g = disjoint_union(g, h)
    return g


def test_shipped_lists_load_and_verify():
    k3 = shipped_critical_list(3)
    assert len(k3.graphs) == 9
    assert [g.n for g in k3.graphs] == [4, 6, 7, 7, 7, 7, 7, 7, 7]
    assert k3.provenance == "shipped"
    k2 = shipped_critical_list(2)
    assert len(k2.graphs) == 2
    assert [g.n for g in k2.graphs] == [3, 5]
    with pytest.raises(CriticalListError):
        shipped_critical_list(5)


def test_critical_list_build_rejects_bad_entries():
    with pytest.raises(CriticalListError):
        CriticalList.build(3, (COGEM,), [path(4)], "test")  # not critical
    with pytest.raises(CriticalListError):
        CriticalList.build(3, (complete(3),), [complete(4)], "test")  # not in family
    with pytest.raises(CriticalListError):
        CriticalList.build(3, (COGEM,), [complete(4), complete(4)], "test")


def test_certify_examples():
    clist = shipped_critical_list(3)
    cert = certify_colourable(wheel(5), 3, clist)
    assert isinstance(cert, NotColourable)
    assert cert.embedding.pattern.n == 6  # W5 itself is the smallest witness
    ok, _ = verify_certificate(wheel(5), 3, cert)
    assert ok

    cert = certify_colourable(cycle(5), 3, clist)
    assert isinstance(cert, Colourable)
    assert verify_certificate(cycle(5), 3, cert)[0]

    cert = certify_colourable(path(6), 3, clist)
    assert isinstance(cert, NotInFamily)
    assert verify_certificate(path(6), 3, cert)[0]


def test_certify_smallest_witness_reported():
    clist = shipped_critical_list(3)
    # W5 joined with K4: the smallest listed critical graph embedded is K4
    host = complement(disjoint_union(complement(wheel(5)), complement(complete(4))))
    cert = certify_colourable(host, 3, clist)
    assert isinstance(cert, NotColourable)
    assert cert.embedding.pattern.n == 4


def test_verify_rejects_tampered_certificates():
    clist = shipped_critical_list(3)
    col = certify_colourable(cycle(5), 3, clist)
    assert isinstance(col, Colourable)
    bad = Colourable(Colouring((0, 0) + col.colouring.colours[2:]))
    ok, reason = verify_certificate(cycle(5), 3, bad)
    assert not ok and "monochromatic" in reason

    cert = certify_colourable(wheel(5), 3, clist)
    from critgraph.search import Embedding

    shuffled = Embedding(cert.embedding.pattern, tuple(reversed(cert.embedding.vertices)))
    bad2 = NotColourable(shuffled)
    ok, _ = verify_certificate(wheel(5), 3, bad2)
    # reversal of W5's embedding need not be an embedding; if it is, the
    # subgraph is still critical, so only assert consistency
    if ok:
        assert shuffled.is_valid_in(wheel(5))
    wrong_len = Colourable(Colouring((0,)))
    assert not verify_certificate(cycle(5), 3, wrong_len)[0]
    out_of_range = Colourable(Colouring((0, 1, 2, 3, 4)))
    assert not verify_certificate(cycle(5), 3, out_of_range)[0]


def test_incomplete_list_error_is_surfaced():
    # A bogus "list" for k=3 holding only K4: W5 is K4-free but chi = 4
    bogus = CriticalList.build(3, (COGEM,), [complete(4)], "test")
    with pytest.raises(IncompleteCriticalListError):
        certify_colourable(wheel(5), 3, bogus)


def test_certify_verify_closure_random():
    rng = random.Random(79)
    clist = shipped_critical_list(3)
    for _ in range(200):
        g = random_cogem_free(rng, 12)
        cert = certify_colourable(g, 3, clist)
        ok, reason = verify_certificate(g, 3, cert)
        assert ok, reason
        assert not isinstance(cert, NotInFamily)


def test_colour_cogem_k4free():
    col = colour_cogem_k4free(cycle(5))
    assert col.is_proper_for(cycle(5), 4)
    with pytest.raises(FamilyViolationError):
        colour_cogem_k4free(complete(4))
    with pytest.raises(FamilyViolationError):
        colour_cogem_k4free(path(6))


def test_colour_cogem_k4free_random_members():
    rng = random.Random(83)
    done = 0
    while done < 60:
        g = random_cogem_free(rng, 10)
        if not is_family_member(g, [realize("K4")]):
            continue
        col = colour_cogem_k4free(g)
        assert col.is_proper_for(g, 4)
        done += 1
