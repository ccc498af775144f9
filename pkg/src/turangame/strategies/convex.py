"""Strategies for the convex-embedding game (vertices at roots of unity,
Constructor's chords may not cross).

Constructor: build a polygon through every vertex Blocker has not
poisoned (claiming consecutive frontier edges), then triangulate it
ear-first: a minimal free short ear cutting across a Blocker chord when
one exists, otherwise one size up with the two covered shorter chords
paired so that one of them always lands, one triangle per pair.

Blocker: grab non-adjacent outer edges. After answering Constructor's
(real or pretended) first outer edge, the outer cycle is typed
a,b,c,a,b,c,...; type-a claims are answered by the adjacent type-b edge
and vice versa, other moves by any fresh type-a/b edge not adjacent to
an already-claimed one. Contracting the collected outer matching bounds
Constructor's triangles by n - matching - 2.
"""

from __future__ import annotations

from typing import Optional

from ..engine import FREE, OWNER_B, GameState, Player
from .base import EMBEDDED_ONLY, Strategy


class ConstructorECB(Strategy):
    id = "c-ecb"
    allowed_side = Player.CONSTRUCTOR
    supported_kinds = EMBEDDED_ONLY

    def __init__(self, side, config):
        super().__init__(side, config)
        self.phase = "poly"
        self.v_c: list[int] = [0]
        self.v_b: set[int] = set()
        self.polygon: list[int] = []
        self.pending: list[tuple[int, int]] = []  # chord-eid pairs
        self._b_edges: list[tuple[int, int]] = []
        self.closed = False
        self._done = False

    # -- observation ----------------------------------------------------------

    def observe(self, state, mover, eid, passed):
        if mover is not Player.BLOCKER:
            return
        u, v = state.edge(eid)
        self._b_edges.append((u, v))
        if self.phase == "poly" and v not in self.v_b and v not in set(self.v_c):
            self.v_b.add(v)

    # -- polygon construction ---------------------------------------------------

    def _poly_move(self, state: GameState) -> Optional[int]:
        frontier = self.v_c[-1]
        nxt = None
        for j in range(frontier + 1, state.n):
            if j not in self.v_b:
                nxt = j
                break
        if nxt is not None:
            self.v_c.append(nxt)
            return state.eid(frontier, nxt)
        # wrap up: close the polygon back to vertex 0 if the edge survived
        self.phase = "tri"
        self.polygon = list(self.v_c)
        if len(self.polygon) >= 3:
            closing = state.eid(0, frontier)
            if state.owner[closing] == FREE:
                self.closed = True
                return closing
        return self._tri_move(state)

    # -- triangulation ------------------------------------------------------------

    def _inner_b_chords(self, state: GameState) -> list[tuple[int, int]]:
        pos = {v: i for i, v in enumerate(self.polygon)}
        s = len(self.polygon)
        out = []
        for (u, v) in self._b_edges:
            iu, iv = pos.get(u), pos.get(v)
            if iu is None or iv is None:
                continue
            gap = (iv - iu) % s
            if gap in (0, 1, s - 1):
                continue  # boundary or degenerate
            out.append((iu, iv))
        return out

    def _ear_eid(self, state: GameState, i: int, k: int) -> int:
        s = len(self.polygon)
        return state.eid(self.polygon[i], self.polygon[(i + k + 1) % s])

    def _free_ears(self, state: GameState, k: int) -> list[int]:
        s = len(self.polygon)
        if k > s - 3:
            return []
        out = []
        for i in range(s):
            if state.owner[self._ear_eid(state, i, k)] == FREE:
                out.append(i)
        return out

    @staticmethod
    def _crosses(i: int, j: int, a: int, b: int, s: int) -> bool:
        """Chords (i,j) and (a,b) of an s-gon, in position space."""
        if len({i, j, a, b}) < 4:
            return False
        def inside(x, lo, hi):
            return (x - lo) % s < (hi - lo) % s and x != lo
        return inside(a, i, j) != inside(b, i, j)

    def _cut(self, i: int, k: int) -> None:
        """Remove the k vertices strictly between positions i and i+k+1."""
        s = len(self.polygon)
        drop = {(i + t) % s for t in range(1, k + 1)}
        self.polygon = [v for idx, v in enumerate(self.polygon) if idx not in drop]

    def _respond_pending(self, state: GameState) -> Optional[int]:
        for idx, (e1, e2) in enumerate(self.pending):
            o1, o2 = state.owner[e1], state.owner[e2]
            if o1 == OWNER_B and o2 == FREE:
                self.pending.pop(idx)
                return e2
            if o2 == OWNER_B and o1 == FREE:
                self.pending.pop(idx)
                return e1
            if o1 != FREE and o2 != FREE:
                self.pending.pop(idx)
                return self._respond_pending(state)
        return None

    def _tri_move(self, state: GameState) -> Optional[int]:
        move = self._respond_pending(state)
        if move is not None:
            return move
        s = len(self.polygon)
        if s < 4:
            return self._cleanup(state)
        chords = self._inner_b_chords(state)
        if not chords:
            ears = self._free_ears(state, 1)
            if not ears:
                return self._cleanup(state)
            i = min(ears, key=lambda i: self._ear_eid(state, i, 1))
            move = self._ear_eid(state, i, 1)
            self._cut(i, 1)
            return move
        for k in range(1, s - 2):
            ears = self._free_ears(state, k)
            if not ears:
                continue
            long_chords = [(a, b) for (a, b) in chords
                           if min((b - a) % s, (a - b) % s) - 1 >= k]
            for i in sorted(ears, key=lambda i: self._ear_eid(state, i, k)):
                j = (i + k + 1) % s
                if any(self._crosses(i, j, a, b, s) for (a, b) in long_chords):
                    move = self._ear_eid(state, i, k)
                    self._cut(i, k)
                    return move
            # case (b): one size up, pairing the two covered k-chords
            big = self._free_ears(state, k + 1)
            if big:
                i = min(big, key=lambda i: self._ear_eid(state, i, k + 1))
                e1 = self._ear_eid(state, i, k)
                e2 = self._ear_eid(state, (i + 1) % s, k)
                move = self._ear_eid(state, i, k + 1)
                if state.owner[e1] == FREE and state.owner[e2] == FREE:
                    self.pending.append((e1, e2))
                self._cut(i, k + 1)
                return move
            i = sorted(ears, key=lambda i: self._ear_eid(state, i, k))[0]
            move = self._ear_eid(state, i, k)
            self._cut(i, k)
            return move
        return self._cleanup(state)

    def _cleanup(self, state: GameState) -> Optional[int]:
        move = self._respond_pending(state)
        if move is not None:
            return move
        while self.pending:
            e1, e2 = self.pending.pop(0)
            for e in sorted((e1, e2)):
                if state.owner[e] == FREE:
                    return e
        self._done = True
        return None

    def next_move(self, state: GameState) -> Optional[int]:
        if self._done:
            return None
        if self.phase == "poly":
            return self._poly_move(state)
        return self._tri_move(state)


class BlockerECB(Strategy):
    id = "b-ecb"
    allowed_side = Player.BLOCKER
    supported_kinds = EMBEDDED_ONLY

    def __init__(self, side, config):
        super().__init__(side, config)
        self.origin: Optional[int] = None  # outer index playing role of position n
        self._last_c: Optional[tuple[int, int]] = None
        self._opening_done = False
        self.typed: int = 3 * ((config.n - 2) // 3)
        self._own_positions: set[int] = set()
        self._strict_ptr = 1   # typed positions left of this are unusable
        self._relaxed_ptr = 1

    def observe(self, state, mover, eid, passed):
        if mover is Player.BLOCKER:
            if self.origin is not None:
                u, v = state.edge(eid)
                idx = self._outer_index_of(state, u, v)
                if idx is not None:
                    self._own_positions.add(self._idx_to_pos(state, idx))
            return
        self._last_c = state.edge(eid)
        if self.origin is None:
            u, v = self._last_c
            n = state.n
            if (v - u) % n == 1 or (u - v) % n == 1:
                lo = u if (u + 1) % n == v else v
                self.origin = lo
            else:
                self.origin = 0  # pretend the first claim was outer edge 0

    # -- outer-edge arithmetic -----------------------------------------------

    def _outer_eid(self, state: GameState, idx: int) -> int:
        n = state.n
        return state.eid(idx % n, (idx + 1) % n)

    def _pos_to_idx(self, state: GameState, p: int) -> int:
        return (self.origin + p) % state.n

    def _idx_to_pos(self, state: GameState, idx: int) -> int:
        p = (idx - self.origin) % state.n
        return state.n if p == 0 else p

    def _outer_index_of(self, state: GameState, u: int, v: int) -> Optional[int]:
        n = state.n
        if (u + 1) % n == v:
            return u
        if (v + 1) % n == u:
            return v
        return None

    @staticmethod
    def _type_of(p: int) -> str:
        return "abc"[(p - 1) % 3]

    def _generic(self, state: GameState) -> Optional[int]:
        # Usability of a typed position only decays (claims are permanent
        # and the own-adjacency set only grows), so two monotone pointers
        # amortize the scans: strict honors non-adjacency, relaxed drops it.
        own = self._own_positions
        n = state.n
        p = self._strict_ptr
        while p <= self.typed:
            if self._type_of(p) != "c":
                e = self._outer_eid(state, self._pos_to_idx(state, p))
                if state.owner[e] == FREE:
                    prev_p = n if p == 1 else p - 1
                    next_p = 1 if p == n else p + 1
                    if prev_p not in own and next_p not in own:
                        self._strict_ptr = p
                        return e
            p += 1
        self._strict_ptr = p
        p = self._relaxed_ptr
        while p <= self.typed:
            if self._type_of(p) != "c":
                e = self._outer_eid(state, self._pos_to_idx(state, p))
                if state.owner[e] == FREE:
                    self._relaxed_ptr = p
                    return e
            p += 1
        self._relaxed_ptr = p
        return self.lowest_free(state)

    def next_move(self, state: GameState) -> Optional[int]:
        if self._last_c is None:
            return self.lowest_free(state)
        if not self._opening_done:
            self._opening_done = True
            e = self._outer_eid(state, self._pos_to_idx(state, state.n - 1))
            if state.owner[e] == FREE:
                return e
            return self._generic(state)
        u, v = self._last_c
        idx = self._outer_index_of(state, u, v)
        if idx is not None:
            p = self._idx_to_pos(state, idx)
            if 1 <= p <= self.typed:
                t = self._type_of(p)
                if t == "a":
                    target = p + 1
                elif t == "b":
                    target = p - 1
                else:
                    target = None
                if target is not None and 1 <= target <= self.typed:
                    e = self._outer_eid(state, self._pos_to_idx(state, target))
                    if state.owner[e] == FREE:
                        return e
        return self._generic(state)
