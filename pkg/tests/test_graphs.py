import random

import pytest

from critgraph import (
    Graph,
    GraphOrderError,
    add_vertex,
    complement,
    disjoint_union,
    emit_graph6,
    induced_subgraph,
    is_isomorphic,
    iter_graph6,
    mask_of,
    parse_graph6,
    without_vertex,
)
from critgraph.graphs import (
    Graph6ByteError,
    Graph6LengthError,
    Graph6OrderError,
    Graph6PaddingError,
)
from critgraph.patterns import complete, cycle, path, realize

from helpers import encode_graph6_reference, random_graph


# Frozen via the independent bit-by-bit encoder in helpers (verified below).
K4_WORD = "C~"
P4_WORD = "Ch"
C5_WORD = "Dhc"


def test_parse_known_words():
    k4 = parse_graph6(K4_WORD)
    assert k4 == complete(4)
    p4 = parse_graph6(P4_WORD)
    assert p4 == path(4)
    c5 = parse_graph6(C5_WORD)
    assert c5 == cycle(5)


def test_emit_known_words():
    assert emit_graph6(complete(4)) == K4_WORD == encode_graph6_reference(complete(4))
    assert emit_graph6(path(4)) == P4_WORD == encode_graph6_reference(path(4))
    assert emit_graph6(cycle(5)) == C5_WORD == encode_graph6_reference(cycle(5))
    assert emit_graph6(Graph.empty(0)) == "?"


def test_emit_matches_reference_encoder():
    rng = random.Random(7)
    for _ in range(300):
        g = random_graph(rng, rng.randint(0, 14))
        assert emit_graph6(g) == encode_graph6_reference(g)


def test_round_trip_random():
    rng = random.Random(11)
    for _ in range(1000):
        g = random_graph(rng, rng.randint(0, 20))
        assert parse_graph6(emit_graph6(g)) == g


def test_parse_errors_are_distinct():
    with pytest.raises(Graph6LengthError):
        parse_graph6("")
    with pytest.raises(Graph6LengthError):
        parse_graph6("C~~")  # too many payload bytes for n=4
    with pytest.raises(Graph6LengthError):
        parse_graph6("D")  # missing payload
    with pytest.raises(Graph6ByteError):
        parse_graph6("C!")  # byte 33 below the graph6 range
    with pytest.raises(Graph6ByteError):
        parse_graph6("Cé")
    # n=3 uses 3 bits; set the lowest padding bit of the final 6-bit group
    word = emit_graph6(complete(3))
    tampered = word[0] + chr(((ord(word[1]) - 63) | 1) + 63)
    with pytest.raises(Graph6PaddingError):
        parse_graph6(tampered)
    with pytest.raises(Graph6OrderError):
        parse_graph6("~??")  # long form refused
    with pytest.raises(Graph6OrderError):
        emit_graph6(Graph.empty(63))


def test_complement():
    gem = complement(realize("co-gem"))
    assert is_isomorphic(gem, realize("gem"))
    assert complement(Graph.empty(5)) == complete(5)
    assert is_isomorphic(complement(cycle(5)), cycle(5))
    rng = random.Random(3)
    for _ in range(100):
        g = random_graph(rng, rng.randint(0, 12))
        assert complement(complement(g)) == g


def test_disjoint_union():
    cogem = disjoint_union(path(4), Graph.empty(1))
    assert cogem.n == 5 and cogem.edge_count == 3
    assert is_isomorphic(cogem, realize("co-gem"))
    k3p1 = disjoint_union(complete(3), Graph.empty(1))
    assert is_isomorphic(k3p1, realize("K3+P1"))
    g = random_graph(random.Random(5), 7)
    assert disjoint_union(g, Graph.empty(0)) == g
    with pytest.raises(GraphOrderError):
        disjoint_union(Graph.empty(40), Graph.empty(40))


def test_induced_subgraph():
    c5 = cycle(5)
    assert induced_subgraph(c5, mask_of([0, 1, 2, 3])) == path(4)
    g = random_graph(random.Random(9), 9)
    assert induced_subgraph(g, g.full_mask) == g
    gem = complement(realize("co-gem"))  # vertex 4 dominates
    assert is_isomorphic(without_vertex(gem, 4), path(4))
    with pytest.raises(ValueError):
        induced_subgraph(c5, 1 << 5)


def test_add_vertex():
    assert add_vertex(complete(3), 0b111) == complete(4)
    assert is_isomorphic(add_vertex(path(4), 0), realize("co-gem"))
    house = add_vertex(cycle(4), mask_of([0, 1]))
    assert house.n == 5 and house.edge_count == 6
    with pytest.raises(ValueError):
        add_vertex(complete(3), 0b1000)
    with pytest.raises(GraphOrderError):
        add_vertex(Graph.empty(64), 0)


def test_constructive_ops_preserve_invariants():
    rng = random.Random(13)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 10))
        h = random_graph(rng, rng.randint(0, 6))
        for out in (
            complement(g),
            disjoint_union(g, h),
            induced_subgraph(g, rng.randrange(1 << g.n)),
            add_vertex(g, rng.randrange(1 << g.n)),
        ):
            out.validate()


def test_complement_commutes_with_induced():
    rng = random.Random(17)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 10))
        s = rng.randrange(1 << g.n)
        assert complement(induced_subgraph(g, s)) == induced_subgraph(complement(g), s)


def test_iter_graph6_skips_headers_and_blanks():
    lines = [">>graph6<<\n", "\n", "C~\n", "Bw\n"]
    gs = list(iter_graph6(lines))
    assert len(gs) == 2 and gs[0] == complete(4)


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphOrderError):
        Graph.empty(65)
