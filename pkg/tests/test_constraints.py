"""Legality predicates and their independent oracles."""

import random
from itertools import combinations

import pytest

from turangame import constraints as cs
from turangame import graphcore as gc
from turangame.graphcore import Graph

from oracles import chords_cross_geometric, is_planar_brute


def test_parse_constraint_strings():
    assert cs.parse_constraint("none") == cs.NONE
    assert cs.parse_constraint("path:6") == cs.forbid_path(6)
    assert cs.parse_constraint("star:4") == cs.forbid_star(4)
    assert cs.parse_constraint("k4") == cs.K4_FREE
    assert cs.parse_constraint("planar") == cs.PLANAR
    assert cs.parse_constraint("embedded") == cs.EMBEDDED
    # k(n) = floor(n^0.4), and the game forbids the next-larger star
    c = cs.parse_constraint("star:fn=pow0.4", n=2000)
    assert c == cs.forbid_star(21)
    with pytest.raises(cs.ConstraintError):
        cs.parse_constraint("star:fn=pow0.4")
    with pytest.raises(cs.ConstraintError):
        cs.parse_constraint("wat")
    for text in ("none", "path:6", "star:4", "k4", "planar", "embedded"):
        assert cs.parse_constraint(text).name == text


def test_is_legal_star_examples():
    g = gc.star_graph(3, n=6)
    assert not cs.is_legal(cs.forbid_star(4), g, 0, 4)  # degree would hit 4
    assert cs.is_legal(cs.forbid_star(5), g, 0, 4)
    assert cs.is_legal(cs.forbid_star(4), g, 1, 2)


def test_is_legal_star_matches_degree_recount():
    rnd = random.Random(3)
    for _ in range(60):
        n = rnd.randint(4, 10)
        k = rnd.choice([3, 4, 5])
        g = Graph(n)
        for _ in range(rnd.randint(0, 2 * n)):
            u, v = rnd.sample(range(n), 2)
            if not g.has_edge(u, v) and cs.is_legal(cs.forbid_star(k), g, u, v):
                g.add_edge(u, v)
        for u in range(n):
            for v in range(u + 1, n):
                if g.has_edge(u, v):
                    continue
                legal = cs.is_legal(cs.forbid_star(k), g, u, v)
                g.add_edge(u, v)
                assert legal == (max(g.degree(u), g.degree(v)) <= k - 1)
                g.remove_edge(u, v)


def test_is_legal_k4():
    g = gc.complete_graph(4)
    g.remove_edge(0, 1)
    assert not cs.is_legal(cs.K4_FREE, g, 0, 1)
    h = gc.cycle_graph(4)
    assert cs.is_legal(cs.K4_FREE, h, 0, 2)


def test_is_legal_none_always_true():
    g = gc.complete_graph(5)
    g.remove_edge(1, 3)
    assert cs.is_legal(cs.NONE, g, 1, 3)


def test_chords_cross_examples():
    assert cs.chords_cross(4, (0, 2), (1, 3))
    assert not cs.chords_cross(4, (0, 1), (2, 3))
    assert not cs.chords_cross(5, (0, 2), (2, 4))  # shared endpoint


def test_chords_cross_against_geometric_oracle_exhaustive():
    for n in range(4, 21):
        edges = list(combinations(range(n), 2))
        for e1, e2 in combinations(edges, 2):
            assert cs.chords_cross(n, e1, e2) == chords_cross_geometric(n, e1, e2), (n, e1, e2)


def test_embedded_legality_matches_scan_oracle():
    rnd = random.Random(11)
    for _ in range(40):
        n = rnd.randint(5, 12)
        g = Graph(n)
        for _ in range(3 * n):
            u, v = rnd.sample(range(n), 2)
            if not g.has_edge(u, v) and cs.is_legal(cs.EMBEDDED, g, u, v):
                g.add_edge(u, v)
        for u in range(n):
            for v in range(u + 1, n):
                if g.has_edge(u, v):
                    continue
                oracle = not any(
                    chords_cross_geometric(n, e, (u, v)) for e in g.edges()
                )
                assert cs.is_legal(cs.EMBEDDED, g, u, v) == oracle


def test_is_planar_examples():
    assert cs.is_planar(gc.complete_graph(4))
    assert not cs.is_planar(gc.complete_graph(5))
    assert cs.is_planar(gc.apollonian_network(8))


def test_planarity_exhaustive_small():
    """All graphs on up to 5 vertices against the Kuratowski oracle."""
    for n in (4, 5):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph(n)
            for i, (u, v) in enumerate(pairs):
                if mask >> i & 1:
                    g.add_edge(u, v)
            assert cs.is_planar(g) == is_planar_brute(g)


def test_planarity_sampled_n6_n7():
    rnd = random.Random(616)
    for n, trials in ((6, 400), (7, 250)):
        pairs = list(combinations(range(n), 2))
        for _ in range(trials):
            g = Graph(n)
            p = rnd.random()
            for u, v in pairs:
                if rnd.random() < p:
                    g.add_edge(u, v)
            got, want = cs.is_planar(g), is_planar_brute(g)
            assert got == want, gc.dump_graph(g)
            if got:
                assert g.edge_count <= max(3 * n - 6, 1)


def test_planarity_adversarial_n7():
    # K5 and K3,3 with subdivided edges on exactly 7 vertices, plus
    # maximal planar graphs with one extra edge squeezed in.
    k5 = gc.complete_graph(5)
    g = Graph(7)
    for u, v in k5.edges():
        g.add_edge(u, v)
    g.remove_edge(0, 1)
    g.add_edge(0, 5)
    g.add_edge(5, 1)
    g.remove_edge(2, 3)
    g.add_edge(2, 6)
    g.add_edge(6, 3)
    assert not cs.is_planar(g) and not is_planar_brute(g)

    h = Graph(7)
    for a in (0, 1, 2):
        for b in (3, 4, 5):
            h.add_edge(a, b)
    h.remove_edge(0, 3)
    h.add_edge(0, 6)
    h.add_edge(6, 3)
    assert not cs.is_planar(h) and not is_planar_brute(h)

    apo = gc.apollonian_network(7)
    assert cs.is_planar(apo) and is_planar_brute(apo)


def test_planar_after_add_agrees_with_static_test():
    rnd = random.Random(5150)
    for _ in range(30):
        n = rnd.randint(5, 9)
        g = Graph(n)
        for _ in range(4 * n):
            u, v = rnd.sample(range(n), 2)
            if not g.has_edge(u, v) and cs.is_legal(cs.PLANAR, g, u, v):
                g.add_edge(u, v)
        assert cs.is_planar(g)
        for u in range(n):
            for v in range(u + 1, n):
                if g.has_edge(u, v):
                    continue
                legal = cs.is_legal(cs.PLANAR, g, u, v)
                g.add_edge(u, v)
                assert legal == cs.is_planar(g)
                g.remove_edge(u, v)


def test_monotonicity_of_constraints():
    """Once illegal, an edge stays illegal as the graph grows."""
    rnd = random.Random(321)
    constraints = [
        cs.forbid_path(4), cs.forbid_path(6), cs.forbid_star(3),
        cs.forbid_star(4), cs.K4_FREE, cs.PLANAR, cs.EMBEDDED,
    ]
    for c in constraints:
        n = 8
        g = Graph(n)
        illegal_seen = set()
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for _ in range(40):
            for u, v in pairs:
                if not g.has_edge(u, v) and not cs.is_legal(c, g, u, v):
                    illegal_seen.add((u, v))
            u, v = rnd.choice(pairs)
            if not g.has_edge(u, v) and cs.is_legal(c, g, u, v):
                g.add_edge(u, v)
            for (a, b) in illegal_seen:
                if not g.has_edge(a, b):
                    assert not cs.is_legal(c, g, a, b)
