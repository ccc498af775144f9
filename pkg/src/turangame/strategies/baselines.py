"""Baseline opponents: uniform random and immediate-triangle greedy."""

from __future__ import annotations

import heapq
from typing import Optional

from ..engine import FREE, GameState, Player
from .base import FreePool, LegalScanner, Strategy


class RandomStrategy(Strategy):
    """Uniform over legal moves (free edges for Blocker)."""

    id = "random"

    def __init__(self, side, config):
        super().__init__(side, config)
        self._pool = FreePool(config.n * (config.n - 1) // 2)
        self._cand: Optional[list[int]] = None  # monotone legal superset

    def observe(self, state, mover, eid, passed):
        self._pool.on_claim(eid)

    def next_move(self, state: GameState) -> Optional[int]:
        if self.side is Player.BLOCKER:
            return self._pool.sample(state, self.rng)
        # Rejection sampling over free edges stays uniform over the legal
        # subset while legality is common; once rejections pile up switch
        # to a candidate cache that only ever shrinks (constraints are
        # monotone, so a filtered-out edge never becomes legal again).
        if self._cand is None:
            for _ in range(40):
                e = self._pool.sample(state, self.rng)
                if e is None:
                    return None
                if state.is_legal_for(Player.CONSTRUCTOR, e):
                    return e
            self._cand = [e for e in range(state.m)
                          if state.is_legal_for(Player.CONSTRUCTOR, e)]
        cand = self._cand
        while cand:
            i = self.rng.randrange(len(cand))
            e = cand[i]
            if state.is_legal_for(Player.CONSTRUCTOR, e):
                return e
            cand[i] = cand[-1]  # stale entries leave for good
            cand.pop()
        return None

    def choose_among(self, state, candidates):
        return self.rng.choice(sorted(candidates))


class _GreedyCommon(Strategy):
    """Lazy max-heap over edges keyed by triangles they would complete in
    Constructor's graph; entries are refreshed on every Constructor claim."""

    def __init__(self, side, config):
        super().__init__(side, config)
        self._gain: dict[int, int] = {}
        self._heap: list[tuple[int, int]] = []
        self._skip = bytearray(config.n * (config.n - 1) // 2)

    def observe(self, state, mover, eid, passed):
        if mover is not Player.CONSTRUCTOR:
            return
        u, v = state.edge(eid)
        g = state.cgraph
        for a, b in ((u, v), (v, u)):
            for x in g.neighbors(b):
                if x == a:
                    continue
                if not g.has_edge(a, x):
                    cand = state.eid(a, x)
                    val = self._gain.get(cand, 0) + 1
                    self._gain[cand] = val
                    heapq.heappush(self._heap, (-val, cand))

    def _pop_best(self, state: GameState, need_legal: bool) -> Optional[int]:
        while self._heap:
            neg, eid = self._heap[0]
            current = self._gain.get(eid)
            if current is None or current != -neg or state.owner[eid] != FREE or self._skip[eid]:
                heapq.heappop(self._heap)
                if state.owner[eid] != FREE:
                    self._gain.pop(eid, None)
                continue
            if need_legal and not state.is_legal_for(Player.CONSTRUCTOR, eid):
                heapq.heappop(self._heap)
                self._skip[eid] = 1  # constraints only tighten
                self._gain.pop(eid, None)
                continue
            return eid
        return None


class GreedyTriangle(_GreedyCommon):
    """Constructor: claim the legal edge completing the most triangles now."""

    id = "greedy-tri"
    allowed_side = Player.CONSTRUCTOR

    def __init__(self, side, config):
        super().__init__(side, config)
        self._scanner = LegalScanner(config.n * (config.n - 1) // 2)

    def next_move(self, state: GameState) -> Optional[int]:
        best = self._pop_best(state, need_legal=True)
        if best is not None:
            return best
        return self._scanner.lowest_legal(state)


class GreedyBlock(_GreedyCommon):
    """Blocker: claim the edge worth the most immediate triangles to
    Constructor; lowest free edge when no triangle is threatened."""

    id = "greedy-block"
    allowed_side = Player.BLOCKER

    def next_move(self, state: GameState) -> Optional[int]:
        best = self._pop_best(state, need_legal=False)
        if best is not None:
            return best
        return self.lowest_free(state)

    def choose_among(self, state, candidates):
        g = state.cgraph
        best, best_key = None, None
        for eid in sorted(candidates):
            u, v = state.edge(eid)
            key = -g.adj.common_count(u, v)
            if best_key is None or key < best_key:
                best, best_key = eid, key
        return best
