"""Acceptance gate: every exit criterion at its stated tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to see one pass/fail
line per criterion. Bounds and tolerances are pinned here; nothing is
deferred to later calibration (the committed activation thresholds for
the asymptotic lower bounds are loaded from the calibration file and
sit below every board size exercised).
"""

import math
import random
import time

from turangame import constraints as cs
from turangame import harness
from turangame.engine import GameConfig, GameState, Player, play_game
from turangame.graphcore import Graph, count_k4, has_diamond
from turangame.solver import solve_exact, solve_plain
from turangame.strategies import make_strategy

from oracles import (chords_cross_geometric, creates_path_brute, is_planar_brute)
import test_pendant


def _line(name: str, detail: str = ""):
    print(f"[ACCEPT] {name}: PASS {detail}".rstrip())


def _game(n, constraint, cn, bn, seed=0, **kw):
    cfg = GameConfig(n=n, constraint=cs.parse_constraint(constraint, n=n),
                     seed=seed, **kw)
    c = make_strategy(cn, Player.CONSTRUCTOR, cfg)
    b = make_strategy(bn, Player.BLOCKER, cfg)
    return play_game(cfg, c, b), c, b


# -- criterion 1: exact values ------------------------------------------------

def test_accept_exact_values():
    t0 = time.time()
    for n in (4, 5, 6):
        for constraint in ("path:4", "star:3"):
            cfg = GameConfig(n=n, constraint=cs.parse_constraint(constraint))
            assert solve_exact(cfg).value == 0, (n, constraint)
    cfg5 = GameConfig(n=5)
    memo = solve_exact(cfg5).value
    oracle = solve_plain(cfg5)
    assert memo == oracle == 1
    elapsed = time.time() - t0
    assert elapsed < 60, f"exact-value suite took {elapsed:.1f}s"
    _line("exact-values", f"(g=0 on path:4/star:3 for n=4..6; memo==oracle at n=5; {elapsed:.1f}s)")


# -- criterion 2: unrestricted potential play ---------------------------------

def test_accept_potential_bound():
    t0 = time.time()
    for n in (40, 60):
        bound = math.ceil(math.comb(n, 3) / 8 - n * (n - 1) / 16)
        opponents = [("es-breaker", 1), ("greedy-block", 1), ("random", 10)]
        for bn, seeds in opponents:
            for seed in range(seeds):
                result, _, _ = _game(n, "none", "es-maker", bn, seed=seed)
                assert result.score >= bound, (n, bn, seed, result.score, bound)
    elapsed = time.time() - t0
    assert elapsed < 300, f"potential suite took {elapsed:.1f}s"
    _line("potential-bound", f"(score >= ceil(C(n,3)/8 - n(n-1)/16) at n=40,60; {elapsed:.1f}s)")


# -- criterion 3: forbidden P6 ------------------------------------------------

def test_accept_p6_family():
    t0 = time.time()
    n0 = harness.activation_threshold("p6")
    assert n0 <= 200, "calibrated threshold must activate the tested sizes"
    series = harness.run_series("p6", [200, 500, 1000], seeds=20)
    assert series.all_pass(), [r for r in series.rows if not r.passed][:3]
    lower_rows = [r for r in series.rows if r.lower is not None]
    assert len(lower_rows) == 3 * 3 * 20
    # certified Blocker against other constructors
    upper = harness.run_series("p6", [200, 500, 1000], seeds=20,
                               constructors=["greedy-tri", "random"],
                               blockers=["b-p6"])
    assert upper.all_pass(), [r for r in upper.rows if not r.passed][:3]
    for r in upper.rows:
        assert r.score <= r.n // 2
    elapsed = time.time() - t0
    assert elapsed < 600, f"p6 suite took {elapsed:.1f}s"
    _line("p6-family", f"(lower at n>=200 across 20 seeds, b-p6 concedes <= n/2; {elapsed:.1f}s)")


# -- criterion 4: forbidden S4 ------------------------------------------------

def test_accept_s4_family():
    n0 = harness.activation_threshold("s4")
    assert n0 <= 400
    series = harness.run_series("s4", [400, 900, 1600], seeds=2)
    assert series.all_pass(), [r for r in series.rows if not r.passed][:3]
    blockers_seen = {r.blocker for r in series.rows}
    assert {"b-s4", "random", "greedy-block", "b-p4", "b-p6", "b-s5",
            "samecc:random"} <= blockers_seen
    _line("s4-lower", "(score >= (n-15*sqrt(n)-1)/3 at n=400,900,1600 vs all blockers)")


def test_accept_s4_blocker_fuzz():
    rnd = random.Random(41)
    for trial in range(1000):
        n = rnd.randint(10, 200)
        cn = rnd.choice(["random", "greedy-tri", "c-s4"])
        result, _, _ = _game(n, "star:4", cn, "b-s4", seed=trial)
        assert not has_diamond(result.final_c), (n, cn, trial)
        assert result.score <= n // 3, (n, cn, trial, result.score)
    _line("s4-blocker", "(1000 fuzzed games: no diamond, concession <= n/3)")


# -- criterion 5: forbidden S5 ------------------------------------------------

def test_accept_s5_blocker_fuzz():
    rnd = random.Random(43)
    for trial in range(1000):
        n = rnd.randint(10, 200)
        cn = rnd.choice(["random", "greedy-tri", "c-s5"])
        result, _, _ = _game(n, "star:5", cn, "b-s5", seed=trial)
        assert count_k4(result.final_c) == 0, (n, cn, trial)
        assert result.score <= n, (n, cn, trial, result.score)
    _line("s5-blocker", "(1000 fuzzed games: no K4, concession <= n)")


def test_accept_s5_constructor():
    n0 = harness.activation_threshold("s5")
    assert n0 <= 900
    for n in (900, 2500):
        bound = math.floor(2 * harness.s4_lower(n) - 6 * math.sqrt(n))
        for bn in ("b-s5", "random", "greedy-block"):
            for seed in (0, 1):
                result, c, _ = _game(n, "star:5", "c-s5", bn, seed=seed)
                r = c.unpaired_count()
                assert r <= 2 * math.sqrt(n), (n, bn, seed, r)
                assert result.score >= bound, (n, bn, seed, result.score, bound)
    _line("s5-constructor", "(r <= 2*sqrt(n) and score >= 2*s4_lower - 6*sqrt(n) at n=900,2500)")


# -- criterion 6: planar game -------------------------------------------------

def test_accept_pcb_planarity_fuzz():
    from turangame.constraints import is_planar
    rnd = random.Random(47)
    for trial in range(200):
        n = rnd.randint(15, 45)
        bn = rnd.choice(["random", "greedy-block"])
        cfg = GameConfig(n=n, constraint=cs.PLANAR, seed=trial)
        c = make_strategy("c-pcb", Player.CONSTRUCTOR, cfg)
        b = make_strategy(bn, Player.BLOCKER, cfg)
        state = GameState(cfg)
        while not state.finished:
            strat = c if state.turn is Player.CONSTRUCTOR else b
            logged = len(state.move_log)
            state.apply_move(strat.next_move(state))
            for rec in state.move_log[logged:]:
                c.observe(state, rec.player, rec.eid, rec.passed)
                b.observe(state, rec.player, rec.eid, rec.passed)
            if state.move_log and state.move_log[-1].player is Player.CONSTRUCTOR:
                assert is_planar(state.cgraph), (n, bn, trial, len(state.move_log))
        assert state.score() <= 3 * n - 8
    _line("pcb-planarity", "(200 fuzzed games planar after every move)")


def test_accept_pcb_bounds():
    for n in (2000, 5000):
        lower = 3 * (n - 647)
        for bn in ("random", "greedy-block"):
            result, _, _ = _game(n, "planar", "c-pcb", bn, seed=0,
                                 validation="fast", stop_on_pass=True)
            assert result.score >= lower, (n, bn, result.score, lower)
            assert result.score <= 3 * n - 8, (n, bn, result.score)
            assert cs.is_planar(result.final_c)
    _line("pcb-bounds", "(score in [3(n-647), 3n-8] at n=2000,5000)")


# -- criterion 7: embedded game -----------------------------------------------

def test_accept_ecb_constructor():
    for n in (300, 1000):
        for bn in harness.FAMILIES["ecb"].blockers:
            result, _, _ = _game(n, "embedded", "c-ecb", bn, seed=0)
            assert result.score >= n / 2 - 5, (n, bn, result.score)
            assert result.score <= n - 2
    _line("ecb-constructor", "(score >= n/2 - 5 at n=300,1000 vs all blockers)")


def test_accept_ecb_blocker():
    for n in (300, 1000):
        for cn in ("c-ecb", "random", "greedy-tri"):
            result, _, _ = _game(n, "embedded", cn, "b-ecb", seed=0)
            outcomes = {o.name: o for o in harness.audit_game(
                result, ["outer-independent", "contraction-bound"])}
            assert outcomes["outer-independent"].passed, (n, cn)
            assert outcomes["contraction-bound"].passed, (n, cn)
            assert result.score <= n - n // 3 - 2, (n, cn, result.score)
    for seed in range(5):
        result, _, _ = _game(9, "embedded", "random", "b-ecb", seed=seed)
        assert result.score <= 4  # 9 - floor(9/3) - 2
    _line("ecb-blocker", "(>= floor(n/3) independent outer edges; concession <= n - floor(n/3) - 2; n=9 <= 4)")


# -- criterion 8: structural audits ---------------------------------------------

def test_accept_samecc_deficit():
    rnd = random.Random(53)
    for trial in range(500):
        n = rnd.randint(6, 40)
        result, _, _ = _game(n, "none", "random", "samecc:random", seed=trial)
        outcome = harness.audit_game(result, ["samecc-deficit"])[0]
        assert outcome.passed, (n, trial, outcome.witness)
    _line("samecc-deficit", "(500 fuzzed games satisfy the per-component claim deficit)")


def test_accept_pendant_leg_adversarial():
    lines = 0
    for n in (5, 6, 7):
        lines += test_pendant._run_exhaustive(n)
    _line("pendant-leg", f"(full-width Blocker search, {lines} lines, gadget always lands in 4 moves)")


# -- criterion 9: predicate oracles -------------------------------------------

def test_accept_creates_path_oracle():
    from itertools import combinations
    from turangame.graphcore import creates_path, has_path
    for k in (4, 5, 6):
        for n in (4, 5):
            pairs = list(combinations(range(n), 2))
            for mask in range(1 << len(pairs)):
                g = Graph(n)
                for i, (u, v) in enumerate(pairs):
                    if mask >> i & 1:
                        g.add_edge(u, v)
                if has_path(g, k):
                    continue
                for u, v in pairs:
                    if not g.has_edge(u, v):
                        assert creates_path(g, u, v, k) == creates_path_brute(g, u, v, k)
    rnd = random.Random(59)
    for k in (4, 5, 6):
        for n in range(6, 10):
            for _ in range(4):
                g = Graph(n)
                pairs = list(combinations(range(n), 2))
                rnd.shuffle(pairs)
                for u, v in pairs:
                    if not creates_path(g, u, v, k) and rnd.random() < 0.75:
                        g.add_edge(u, v)
                for u in range(n):
                    for v in range(u + 1, n):
                        if not g.has_edge(u, v):
                            assert creates_path(g, u, v, k) == creates_path_brute(g, u, v, k)
    _line("creates-path-oracle", "(subset Hamiltonian-path oracle agrees, n <= 9)")


def test_accept_chords_cross_oracle():
    from itertools import combinations
    for n in range(4, 21):
        edges = list(combinations(range(n), 2))
        for e1, e2 in combinations(edges, 2):
            assert cs.chords_cross(n, e1, e2) == chords_cross_geometric(n, e1, e2)
    _line("chords-cross-oracle", "(geometric segment intersection agrees, n <= 20 exhaustive)")


def test_accept_planarity_oracle():
    from itertools import combinations
    for n in (4, 5):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph(n)
            for i, (u, v) in enumerate(pairs):
                if mask >> i & 1:
                    g.add_edge(u, v)
            got = cs.is_planar(g)
            assert got == is_planar_brute(g)
            if got and n >= 3:
                assert g.edge_count <= 3 * n - 6
    rnd = random.Random(61)
    for n, trials in ((6, 500), (7, 400)):
        pairs = list(combinations(range(n), 2))
        for _ in range(trials):
            g = Graph(n)
            p = rnd.random()
            for u, v in pairs:
                if rnd.random() < p:
                    g.add_edge(u, v)
            assert cs.is_planar(g) == is_planar_brute(g)
    # adversarial: subdivided Kuratowski graphs and stacked triangulations
    from turangame.graphcore import apollonian_network, complete_graph
    k5_sub = Graph(7)
    for u, v in complete_graph(5).edges():
        k5_sub.add_edge(u, v)
    k5_sub.remove_edge(0, 1)
    k5_sub.add_edge(0, 5)
    k5_sub.add_edge(5, 1)
    k5_sub.remove_edge(2, 3)
    k5_sub.add_edge(2, 6)
    k5_sub.add_edge(6, 3)
    assert not cs.is_planar(k5_sub) and not is_planar_brute(k5_sub)
    apo = apollonian_network(7)
    assert cs.is_planar(apo) and is_planar_brute(apo)
    _line("planarity-oracle", "(edge bound + Kuratowski search agrees; exhaustive n<=5, sampled n=6,7)")
