#!/usr/bin/env python3
"""Benchmark the compiled bitset kernel against the pure-Python twin.

Micro-benchmarks hit the three hot primitives (common-neighbor popcount,
bounded path search, chord-crossing scan); the macro benchmark plays a
full forbidden-P6 game through each backend in a subprocess (the backend
is chosen at import time).
"""

from __future__ import annotations

import os
import random
import subprocess
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from turangame import _bitsets

try:
    from turangame import _kernels
except ImportError:
    _kernels = None


def bench_common_count(mod, n=2000, edges=6000, queries=200_000):
    rnd = random.Random(1)
    adj = mod.BitAdjacency(n)
    for _ in range(edges):
        u, v = rnd.sample(range(n), 2)
        adj.add(u, v)
    pairs = [tuple(rnd.sample(range(n), 2)) for _ in range(queries)]
    t = time.perf_counter()
    total = 0
    for u, v in pairs:
        total += adj.common_count(u, v)
    return time.perf_counter() - t, total


def bench_path_through(mod, n=400, queries=20_000):
    rnd = random.Random(2)
    adj = mod.BitAdjacency(n)
    # star-heavy graph: the adversarial shape for bounded path search
    for c in range(0, n, 40):
        for leaf in range(c + 1, min(c + 38, n)):
            adj.add(c, leaf)
    pairs = [tuple(rnd.sample(range(n), 2)) for _ in range(queries)]
    t = time.perf_counter()
    hits = 0
    for u, v in pairs:
        if not adj.has(u, v) and adj.path_through(u, v, 6):
            hits += 1
    return time.perf_counter() - t, hits


def bench_crossing(mod, n=2000, chords=3000, queries=200_000):
    rnd = random.Random(3)
    from array import array
    us, vs = array("i"), array("i")
    for _ in range(chords):
        a, b = sorted(rnd.sample(range(n), 2))
        us.append(a)
        vs.append(b)
    pairs = [tuple(sorted(rnd.sample(range(n), 2))) for _ in range(queries)]
    t = time.perf_counter()
    crossings = 0
    for a, b in pairs:
        if mod.crossing_any(us, vs, len(us), a, b):
            crossings += 1
    return time.perf_counter() - t, crossings


def bench_game(backend_env: str) -> float:
    code = (
        "import time; t=time.perf_counter();"
        "from turangame.engine import GameConfig, Player, play_game;"
        "from turangame import constraints as cs;"
        "from turangame.strategies import make_strategy;"
        "cfg=GameConfig(n=400, constraint=cs.parse_constraint('path:6'), seed=3);"
        "r=play_game(cfg, make_strategy('c-p6', Player.CONSTRUCTOR, cfg),"
        " make_strategy('b-p6', Player.BLOCKER, cfg));"
        "print(time.perf_counter()-t)"
    )
    env = dict(os.environ)
    env["PYTHONPATH"] = str(Path(__file__).resolve().parent.parent / "src")
    if backend_env:
        env["TURANGAME_PURE_PYTHON"] = "1"
    else:
        env.pop("TURANGAME_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main() -> None:
    mods = [("python", _bitsets)]
    if _kernels is not None:
        mods.append(("cython", _kernels))
    print(f"{'benchmark':<24} " + " ".join(f"{name:>12}" for name, _ in mods) + "   speedup")
    for bench in (bench_common_count, bench_path_through, bench_crossing):
        times = []
        checks = []
        for _, mod in mods:
            dt, check = bench(mod)
            times.append(dt)
            checks.append(check)
        assert len(set(checks)) == 1, f"{bench.__name__}: backends disagree: {checks}"
        ratio = times[0] / times[-1] if len(times) > 1 else 1.0
        print(f"{bench.__name__:<24} " + " ".join(f"{t:>11.3f}s" for t in times)
              + f"   {ratio:>6.1f}x")
    game_times = [bench_game(backend_env="pure")]
    if _kernels is not None:
        game_times.append(bench_game(backend_env=""))
    ratio = game_times[0] / game_times[-1] if len(game_times) > 1 else 1.0
    print(f"{'full p6 game (n=400)':<24} " + " ".join(f"{t:>11.3f}s" for t in game_times)
          + f"   {ratio:>6.1f}x")


if __name__ == "__main__":
    main()
