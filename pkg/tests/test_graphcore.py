"""Graph core: edge arithmetic, incremental counts, structures, paths."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turangame import graphcore as gc
from turangame.graphcore import Graph, StructureKind, find_structure

from oracles import count_triangles_brute, creates_path_brute, count_k4_brute


@pytest.mark.parametrize("n", [2, 3, 4, 7, 13, 50])
def test_edge_id_roundtrip(n):
    seen = set()
    for u in range(n):
        for v in range(u + 1, n):
            eid = gc.edge_id(n, u, v)
            assert gc.edge_id(n, v, u) == eid
            assert gc.edge_endpoints(n, eid) == (u, v)
            seen.add(eid)
    assert seen == set(range(gc.num_edges(n)))


def test_edge_id_is_lexicographic():
    n = 6
    ids = [gc.edge_id(n, u, v) for u in range(n) for v in range(u + 1, n)]
    assert ids == sorted(ids)


def test_add_remove_edge_errors():
    g = Graph(4)
    g.add_edge(0, 1)
    with pytest.raises(gc.GraphError):
        g.add_edge(1, 0)
    with pytest.raises(gc.GraphError):
        g.add_edge(2, 2)
    with pytest.raises(gc.GraphError):
        g.remove_edge(2, 3)
    with pytest.raises(gc.GraphError):
        g.triangle_delta(0, 1)


def test_triangle_delta_examples():
    g = Graph(5)
    assert g.triangle_delta(0, 1) == 0  # empty graph: no common neighbours
    g.add_edge(0, 1)
    g.add_edge(0, 2)
    assert g.triangle_delta(1, 2) == 1  # completes the triangle
    k4m = gc.complete_graph(4)
    k4m.remove_edge(0, 1)
    assert k4m.triangle_delta(0, 1) == 2  # common neighbours {2, 3}


def test_count_triangles_examples():
    assert gc.complete_graph(6).triangle_count == 20  # C(6,3)
    assert gc.cycle_graph(5).triangle_count == 0
    assert gc.apollonian_network(5).triangle_count == 7  # 3n-8 at n=5


def test_apollonian_is_planar_sized():
    for n in range(3, 12):
        g = gc.apollonian_network(n)
        assert g.edge_count == 3 * n - 6
        assert g.triangle_count == 3 * n - 8


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 9), st.randoms(use_true_random=False))
def test_incremental_triangles_match_brute_force(n, rnd):
    g = Graph(n)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rnd.shuffle(pairs)
    for u, v in pairs[: rnd.randint(0, len(pairs))]:
        delta_before = g.triangle_delta(u, v)
        before = g.triangle_count
        g.add_edge(u, v)
        assert g.triangle_count == before + delta_before
        assert g.triangle_count == count_triangles_brute(g)


def test_random_sequences_triangle_count_battery():
    rnd = random.Random(20260811)
    for trial in range(300):
        n = rnd.randint(3, 12)
        g = Graph(n)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rnd.shuffle(pairs)
        for u, v in pairs[: rnd.randint(0, len(pairs))]:
            g.add_edge(u, v)
        assert g.triangle_count == count_triangles_brute(g)
        assert g.adj.count_triangles() == g.triangle_count
        assert sum(g.degree(v) for v in range(n)) == 2 * g.edge_count


def test_k4_tracking_matches_brute():
    rnd = random.Random(7)
    for _ in range(80):
        n = rnd.randint(4, 9)
        g = Graph(n, track_k4=True)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rnd.shuffle(pairs)
        for u, v in pairs[: rnd.randint(0, len(pairs))]:
            g.add_edge(u, v)
        assert g.k4_count == count_k4_brute(g)
        assert gc.count_k4(g) == g.k4_count


def test_components_partition_vertices():
    rnd = random.Random(99)
    for _ in range(50):
        n = rnd.randint(2, 12)
        g = Graph(n)
        for _ in range(rnd.randint(0, 2 * n)):
            u, v = rnd.sample(range(n), 2)
            if not g.has_edge(u, v):
                g.add_edge(u, v)
        comps = g.components()
        covered = sorted(v for comp in comps for v in comp)
        assert covered == list(range(n))
        for comp in comps:
            rep = min(comp)
            assert g.component_of(rep) == comp
            for v in comp:
                assert g.same_component(rep, v)
                assert g.component_size(v) == len(comp)


def test_component_of_examples():
    g = Graph(5)
    assert g.component_of(3) == {3}
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    assert g.component_of(0) == {0, 1, 2}
    h = Graph(4)
    h.add_edge(0, 1)
    h.add_edge(2, 3)
    assert h.component_of(0) == {0, 1}


def test_creates_path_examples():
    g = gc.path_graph(5, n=6)
    assert gc.creates_path(g, 4, 5, 6)  # extends P5 to P6
    tri = Graph(4)
    for u, v in [(0, 1), (1, 2), (0, 2)]:
        tri.add_edge(u, v)
    assert not gc.creates_path(tri, 2, 3, 6)  # only 4 vertices reachable
    star = gc.star_graph(5)
    assert gc.creates_path(star, 1, 2, 4)  # leaf-leaf edge: l3-c-l1-l2


def _pk_free_random_graph(rnd, n, k):
    g = Graph(n)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rnd.shuffle(pairs)
    for u, v in pairs:
        if not gc.creates_path(g, u, v, k) and rnd.random() < 0.7:
            g.add_edge(u, v)
    return g


def test_creates_path_agrees_with_subset_oracle():
    """Exhaustive on all graphs for n <= 5, randomized P_k-free graphs to n = 9."""
    for k in (4, 5, 6):
        for n in (4, 5):
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            for mask in range(1 << len(pairs)):
                g = Graph(n)
                for i, (u, v) in enumerate(pairs):
                    if mask >> i & 1:
                        g.add_edge(u, v)
                if gc.has_path(g, k):
                    continue  # predicate contract: graph is already P_k-free
                for u, v in pairs:
                    if not g.has_edge(u, v):
                        assert gc.creates_path(g, u, v, k) == creates_path_brute(g, u, v, k)
    rnd = random.Random(424242)
    for k in (4, 5, 6):
        for n in (6, 7, 8, 9):
            for _ in range(6):
                g = _pk_free_random_graph(rnd, n, k)
                for u in range(n):
                    for v in range(u + 1, n):
                        if not g.has_edge(u, v):
                            assert gc.creates_path(g, u, v, k) == creates_path_brute(g, u, v, k)


def test_has_path_basics():
    assert gc.has_path(gc.path_graph(6, n=8), 6)
    assert not gc.has_path(gc.path_graph(5, n=8), 6)
    assert gc.has_path(gc.complete_graph(4), 4)


def test_find_cherry_and_triangle():
    g = Graph(4)
    g.add_edge(0, 1)
    g.add_edge(0, 2)
    tag = find_structure(g, StructureKind.CHERRY)
    assert tag.roles["center"] == 0
    assert set(tag.roles["leaves"]) == {1, 2}
    g.add_edge(1, 2)
    assert find_structure(g, StructureKind.CHERRY) is None  # no induced S2 left
    tri = find_structure(g, StructureKind.TRIANGLE)
    assert tri.vertices == (0, 1, 2)


def test_find_pendant_leg_and_diamond():
    g = Graph(5)
    for u, v in [(0, 1), (1, 2), (0, 2), (2, 3)]:
        g.add_edge(u, v)
    tag = find_structure(g, StructureKind.PENDANT_LEG_TRIANGLE)
    assert tag is not None
    assert set(tag.roles["triangle"]) == {0, 1, 2}
    assert tag.roles["leg"] == (2, 3)

    d = Graph(5)
    for u, v in [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]:
        d.add_edge(u, v)
    dia = find_structure(d, StructureKind.DIAMOND)
    assert dia is not None
    assert set(dia.vertices) == {0, 1, 2, 3}
    assert not gc.has_diamond(gc.cycle_graph(4))
    assert gc.has_diamond(d)


def test_find_star_fan_wheel():
    star = gc.star_graph(4)
    tag = find_structure(star, StructureKind.STAR, k=4)
    assert tag.roles["center"] == 0
    assert len(tag.roles["leaves"]) == 4

    fan = Graph(7)
    for i in range(1, 7):
        fan.add_edge(0, i)
    for i in range(1, 6):
        fan.add_edge(i, i + 1)
    tag = find_structure(fan, StructureKind.FAN, k=6)
    assert tag is not None and tag.roles["center"] == 0
    path = tag.roles["path"]
    assert all(fan.has_edge(path[i], path[i + 1]) for i in range(5))

    wheel = Graph(6)
    for i in range(1, 6):
        wheel.add_edge(0, i)
    for i in range(1, 5):
        wheel.add_edge(i, i + 1)
    wheel.add_edge(5, 1)
    tag = find_structure(wheel, StructureKind.WHEEL, k=5)
    assert tag is not None and tag.roles["center"] == 0
    assert find_structure(wheel, StructureKind.WHEEL, k=4) is None


def test_w4_type_classification():
    def w4(extra_edges=()):
        g = Graph(8)
        for i in range(1, 5):
            g.add_edge(0, i)
        for a, b in [(1, 2), (2, 3), (3, 4), (4, 1)]:
            g.add_edge(a, b)
        for a, b in extra_edges:
            g.add_edge(a, b)
        return g

    assert find_structure(w4(), StructureKind.TYPE_A) is not None
    b = w4([(1, 5), (2, 5)])
    assert find_structure(b, StructureKind.TYPE_A) is None
    assert find_structure(b, StructureKind.TYPE_B) is not None
    c = w4([(1, 5), (2, 5), (3, 6), (4, 6)])
    assert find_structure(c, StructureKind.TYPE_C) is not None
    d = w4([(1, 5), (2, 5), (4, 5)])
    assert find_structure(d, StructureKind.TYPE_D) is not None


def test_graph_serialization_roundtrip():
    g = gc.apollonian_network(6)
    text = gc.dump_graph(g)
    assert text.splitlines()[0] == "n 6"
    h = gc.load_graph(text)
    assert h.n == g.n and h.edge_count == g.edge_count
    assert sorted(h.edges()) == sorted(g.edges())


def test_copy_is_independent():
    g = gc.cycle_graph(5)
    h = g.copy()
    h.add_edge(0, 2)
    assert not g.has_edge(0, 2)
    assert g.triangle_count == 0 and h.triangle_count == 1
