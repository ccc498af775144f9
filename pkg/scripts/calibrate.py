#!/usr/bin/env python3
"""Calibrate activation thresholds for the asymptotic lower bounds.

For each family whose lower bound comes with an implicit "n large
enough", walk an ascending grid of board sizes and record the smallest
n at which the certified Constructor met the bound in every game of the
battery (the certified Blocker and the greedy spoiler once each, the
random Blocker across many seeds), with every larger grid point also
passing. Writes src/turangame/harness_calibration.json.
"""

from __future__ import annotations

import json
import math
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from turangame import constraints as cs
from turangame.engine import GameConfig, Player, play_game
from turangame.strategies import make_strategy

RANDOM_SEEDS = 100

GRIDS = {
    "p6": ("path:6", "c-p6", ["b-p6", "greedy-block"], "p6_lower",
           [50, 80, 120, 160, 200, 300, 400]),
    "s4": ("star:4", "c-s4", ["b-s4", "greedy-block", "b-p6", "samecc:random"], "s4_lower",
           [100, 150, 200, 300, 400, 600]),
    "s5": ("star:5", "c-s5", ["b-s5", "greedy-block"], "s5_lower",
           [100, 200, 300, 500, 700, 900]),
}


def lower_value(name: str, n: int) -> float:
    from turangame import harness
    return getattr(harness, name)(n)


def battery_passes(constraint: str, c_name: str, blockers: list[str], bound: float, n: int) -> bool:
    cons = cs.parse_constraint(constraint, n=n)
    jobs = [(b, 0) for b in blockers] + [("random", s) for s in range(RANDOM_SEEDS)]
    for b_name, seed in jobs:
        cfg = GameConfig(n=n, constraint=cons, seed=seed, stop_on_pass=True)
        game = play_game(cfg,
                         make_strategy(c_name, Player.CONSTRUCTOR, cfg),
                         make_strategy(b_name, Player.BLOCKER, cfg))
        if game.score < math.floor(bound):
            print(f"    n={n}: FAIL vs {b_name} seed {seed}: "
                  f"{game.score} < {bound:.2f}", flush=True)
            return False
    return True


def main() -> None:
    out = {}
    for family, (constraint, c_name, blockers, bound_name, grid) in GRIDS.items():
        print(f"== {family}", flush=True)
        passing = []
        for n in grid:
            bound = lower_value(bound_name, n)
            t = time.time()
            ok = battery_passes(constraint, c_name, blockers, bound, n)
            print(f"  n={n}: bound {bound:.2f} -> {'pass' if ok else 'fail'} "
                  f"({time.time()-t:.1f}s)", flush=True)
            passing.append((n, ok))
        n0 = None
        for i, (n, ok) in enumerate(passing):
            if ok and all(o for _, o in passing[i:]):
                n0 = n
                break
        if n0 is None:
            n0 = grid[-1] + 1
            print(f"  WARNING: no grid point stabilizes; provisional n0={n0}")
        out[family] = {
            "n0": n0,
            "method": "ascending grid, all larger grid points passing",
            "grid": grid,
            "battery": blockers + [f"random x{RANDOM_SEEDS}"],
        }
        print(f"  -> n0({family}) = {n0}", flush=True)
    target = Path(__file__).resolve().parent.parent / "src" / "turangame" / "harness_calibration.json"
    target.write_text(json.dumps(out, indent=2) + "\n")
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
