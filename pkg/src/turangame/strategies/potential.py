"""Weight-function play for unrestricted triangle scoring.

Every triangle with no Blocker edge carries weight 2^-(number of its
free edges); the board potential is the sum over surviving triangles.
The greedy certified by the scoring criterion claims, on either side,
the free edge whose claim changes the potential the most, and that gain
is the same quantity for both sides: the summed weight of surviving
triangles through the edge (claiming doubles each, spoiling kills each).

Weights are kept as integers scaled by 8 (free count is at most 3).
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Callable, Optional

from ..engine import FREE, OWNER_B, OWNER_C, GameState, Player
from .base import NONE_ONLY, Strategy


class TrianglePotential:
    """Per-edge claim gains over the triangles of a vertex subset.

    Self-contained: callers feed every claim whose endpoints both lie in
    the subset via `claim`, and draw moves via `best`.
    """

    def __init__(self, n: int, vertices, eid_fn: Callable[[int, int], int]):
        self.verts = sorted(vertices)
        self._eid = eid_fn
        self._owner: dict[int, int] = {}
        self._in = set(self.verts)
        base = 1  # weight of an all-free triangle, scaled: 2^(3-3)
        init = (len(self.verts) - 2) * base
        self.gain: dict[int, int] = {}
        self._heap: list[tuple[int, int]] = []
        for i, u in enumerate(self.verts):
            for v in self.verts[i + 1:]:
                e = eid_fn(u, v)
                self.gain[e] = init
                self._heap.append((-init, e))
        heapq.heapify(self._heap)

    def covers(self, u: int, v: int) -> bool:
        return u in self._in and v in self._in

    def _status(self, u: int, v: int) -> int:
        return self._owner.get(self._eid(u, v), FREE)

    def claim(self, u: int, v: int, who: int) -> None:
        """Record a claim; `who` is OWNER_C or OWNER_B."""
        if not self.covers(u, v):
            return
        e = self._eid(u, v)
        for w in self.verts:
            if w == u or w == v:
                continue
            s1 = self._status(u, w)
            s2 = self._status(v, w)
            if s1 == OWNER_B or s2 == OWNER_B:
                continue  # triangle already dead
            f_before = 1 + (s1 == FREE) + (s2 == FREE)
            weight = 1 << (3 - f_before)
            if who == OWNER_C:
                delta = weight  # weight doubles; others gain the old weight
            else:
                delta = -weight  # triangle dies; remove its weight
            if s1 == FREE:
                self._bump(self._eid(u, w), delta)
            if s2 == FREE:
                self._bump(self._eid(v, w), delta)
        self._owner[e] = who
        self.gain.pop(e, None)

    def _bump(self, e: int, delta: int) -> None:
        val = self.gain.get(e)
        if val is None:
            return
        val += delta
        self.gain[e] = val
        heapq.heappush(self._heap, (-val, e))

    def best(self, usable: Callable[[int], bool]) -> Optional[int]:
        """Highest-gain usable edge, lowest id on ties."""
        heap = self._heap
        while heap:
            neg, e = heap[0]
            val = self.gain.get(e)
            if val is None or val != -neg:
                heapq.heappop(heap)
                continue
            if not usable(e):
                heapq.heappop(heap)
                self.gain.pop(e, None)
                continue
            return e
        return None

    def potential(self) -> Fraction:
        """Current potential, recomputed exactly; test and audit use."""
        total = Fraction(0)
        vs = self.verts
        for i, u in enumerate(vs):
            for j in range(i + 1, len(vs)):
                v = vs[j]
                for w in vs[j + 1:]:
                    ss = (self._status(u, v), self._status(u, w), self._status(v, w))
                    if OWNER_B in ss:
                        continue
                    f = sum(1 for s in ss if s == FREE)
                    total += Fraction(1, 2 ** f)
        return total


def potential_value(state: GameState) -> Fraction:
    """Board potential of a live game (independent recount)."""
    pe = TrianglePotential(state.n, range(state.n), state.eid)
    for e in range(state.m):
        if state.owner[e] != FREE:
            u, v = state.edge(e)
            pe.claim(u, v, state.owner[e])
    return pe.potential()


class _PotentialBase(Strategy):
    supported_kinds = NONE_ONLY

    def __init__(self, side, config):
        super().__init__(side, config)
        self._pe: Optional[TrianglePotential] = None

    def _ensure(self, state: GameState) -> TrianglePotential:
        if self._pe is None:
            self._pe = TrianglePotential(state.n, range(state.n), state.eid)
        return self._pe

    def observe(self, state, mover, eid, passed):
        pe = self._ensure(state)
        u, v = state.edge(eid)
        pe.claim(u, v, OWNER_C if mover is Player.CONSTRUCTOR else OWNER_B)

    def next_move(self, state: GameState) -> Optional[int]:
        pe = self._ensure(state)
        move = pe.best(lambda e: state.owner[e] == FREE)
        if move is None:
            move = self.lowest_free(state)
        return move


class PotentialMaker(_PotentialBase):
    id = "es-maker"
    allowed_side = Player.CONSTRUCTOR


class PotentialBreaker(_PotentialBase):
    id = "es-breaker"
    allowed_side = Player.BLOCKER
