"""Strategies for the forbidden-path games.

Blocker for P4: in a P4-free graph a triangle can only sit alone, so
closing every freshly appeared isolated three-vertex path to zero keeps
the score at zero.

The P6 pair: Constructor farms big stars and then matches star leaves
(one triangle per matched pair, all meeting at the star center), while
Blocker answers inside Constructor's latest component with a rule
ladder keyed on edges that sit in two triangles, first four-cycles, and
triangle-closing edges.
"""

from __future__ import annotations

import heapq
import math
from typing import Optional

from ..constraints import ConstraintKind
from ..engine import FREE, GameState, Player
from .base import Strategy, StrategyConfigError


class BlockerP4(Strategy):
    """Close the triangle of every isolated P3 the moment it appears."""

    id = "b-p4"
    allowed_side = Player.BLOCKER

    def __init__(self, side, config):
        super().__init__(side, config)
        self._last_c: Optional[tuple[int, int]] = None

    def observe(self, state, mover, eid, passed):
        if mover is Player.CONSTRUCTOR:
            self._last_c = state.edge(eid)

    def next_move(self, state: GameState) -> Optional[int]:
        if self._last_c is not None:
            closer = self._p3_closer(state, *self._last_c)
            if closer is not None and state.owner[closer] == FREE:
                return closer
        return self.lowest_free(state)

    def _p3_closer(self, state: GameState, u: int, v: int) -> Optional[int]:
        # isolated P3 through the last edge: one endpoint of degree 2
        # whose two neighbors have degree 1
        cg = state.cgraph
        for mid, other in ((u, v), (v, u)):
            if cg.degree(mid) != 2 or cg.degree(other) != 1:
                continue
            ends = [w for w in cg.neighbors(mid)]
            if all(cg.degree(w) == 1 for w in ends):
                return state.eid(ends[0], ends[1])
        return None


class ConstructorP6(Strategy):
    """Stage I big stars, Stage II leaf matchings inside each star."""

    id = "c-p6"
    allowed_side = Player.CONSTRUCTOR
    supported_kinds = frozenset({ConstraintKind.FORBID_PATH})

    def __init__(self, side, config):
        super().__init__(side, config)
        if config.constraint.k != 6:
            raise StrategyConfigError("c-p6 plays the forbidden-P6 game only")
        self.stage = 1
        self.stars: list[dict] = []  # {"center": v, "leaves": [..], "unmatched": [..]}
        self._center: Optional[int] = None
        self._leaves: list[int] = []
        self._dead_centers: set[int] = set()
        self._threshold = config.n / math.log(config.n)

    # -- bookkeeping ----------------------------------------------------------

    def _isolated(self, state: GameState) -> list[int]:
        cg = state.cgraph
        return [v for v in range(state.n) if cg.degree(v) == 0]

    def _finish_star(self) -> None:
        if self._center is not None and self._leaves:
            self.stars.append({"center": self._center, "leaves": list(self._leaves)})
        self._center = None
        self._leaves = []

    def observe(self, state, mover, eid, passed):
        if mover is Player.CONSTRUCTOR and self._center is not None:
            u, v = state.edge(eid)
            if self._center in (u, v):
                leaf = v if u == self._center else u
                if leaf not in self._leaves:
                    self._leaves.append(leaf)

    # -- play -----------------------------------------------------------------

    def next_move(self, state: GameState) -> Optional[int]:
        if self.stage == 1:
            move = self._stage1(state)
            if move is not None:
                return move
            self._finish_star()
            self.stage = 2
        return self._stage2(state)

    def _stage1(self, state: GameState) -> Optional[int]:
        isolated = self._isolated(state)
        while True:
            if len(isolated) <= self._threshold:
                return None
            if self._center is None:
                cand = [v for v in isolated if v not in self._dead_centers]
                if not cand:
                    return None
                bdeg = state.bgraph.degree
                self._center = min(cand, key=lambda v: (bdeg(v), v))
                self._leaves = []
                isolated = [v for v in isolated if v != self._center]
            best = None
            for u in isolated:
                if u == self._center:
                    continue
                e = state.eid(self._center, u)
                if state.owner[e] == FREE and (best is None or e < best):
                    best = e
            if best is not None:
                return best
            # star saturated (every isolated vertex blocked off from it)
            self._dead_centers.add(self._center)
            self._finish_star()
            isolated = self._isolated(state)

    def _stage2(self, state: GameState) -> Optional[int]:
        for star in self.stars:
            found = self._matching_edge(state, star)
            if found is not None:
                eid, a, b = found
                star["matched"].add(a)
                star["matched"].add(b)
                return eid
        return None

    def _matching_edge(self, state: GameState, star: dict):
        # Pair validity (both leaves unmatched, edge free) only decays, so a
        # monotone pointer over the id-sorted pair list amortizes the scan.
        if "pairs" not in star:
            leaves = star["leaves"]
            pairs = sorted(
                (state.eid(a, b), a, b)
                for i, a in enumerate(leaves) for b in leaves[i + 1:]
            )
            star["pairs"] = pairs
            star["ptr"] = 0
            star["matched"] = set()
        pairs, matched = star["pairs"], star["matched"]
        i = star["ptr"]
        while i < len(pairs):
            e, a, b = pairs[i]
            if a in matched or b in matched or state.owner[e] != FREE:
                i += 1
                continue
            star["ptr"] = i
            return (e, a, b)
        star["ptr"] = i
        return None


class BlockerP6(Strategy):
    """Component-following rule ladder for the forbidden-P6 game."""

    id = "b-p6"
    allowed_side = Player.BLOCKER

    def __init__(self, side, config):
        super().__init__(side, config)
        n = config.n
        m = n * (n - 1) // 2
        self._dsu = list(range(n))
        self._has_c4: dict[int, bool] = {}
        self._two_tri: set[int] = set()
        self._last_c: Optional[tuple[int, int]] = None
        self._rule2: list[tuple[int, int]] = []
        # rule 3 candidates: free edges that would close a triangle.
        # Closability is monotone, so each edge enters the heap once.
        self._closers: list[int] = []
        self._closer_seen = bytearray(m)

    def _find(self, x):
        dsu = self._dsu
        root = x
        while dsu[root] != root:
            root = dsu[root]
        while dsu[x] != root:
            dsu[x], x = root, dsu[x]
        return root

    def observe(self, state, mover, eid, passed):
        if mover is not Player.CONSTRUCTOR:
            return
        u, v = state.edge(eid)
        self._last_c = (u, v)
        self._rule2 = []
        cg = state.cgraph
        ru, rv = self._find(u), self._find(v)
        had_c4 = self._has_c4.get(ru, False) or self._has_c4.get(rv, False)
        cycles = []
        for x in cg.neighbors(u):
            if x == v:
                continue
            for y in cg.neighbors(v):
                if y == u or y == x:
                    continue
                if cg.has_edge(x, y):
                    cycles.append((u, x, y, v))
        if cycles and not had_c4:
            # first four-cycle of this component: remember the diagonals
            for (a, x, y, b) in cycles:
                self._rule2.append((a, y))
                self._rule2.append((x, b))
        self._dsu[ru] = rv
        self._has_c4[rv] = had_c4 or bool(cycles)
        common = cg.common_neighbors(u, v)
        if len(common) >= 2:
            self._two_tri.add(eid)
        for w in common:
            if cg.adj.common_count(u, w) >= 2:
                self._two_tri.add(state.eid(u, w))
            if cg.adj.common_count(v, w) >= 2:
                self._two_tri.add(state.eid(v, w))
        # the new edge turns (u, x) / (v, x) into triangle closers
        seen = self._closer_seen
        for a, b in ((u, v), (v, u)):
            for x in cg.neighbors(b):
                if x == a or cg.has_edge(a, x):
                    continue
                cand = state.eid(a, x)
                if not seen[cand]:
                    seen[cand] = 1
                    heapq.heappush(self._closers, cand)

    def next_move(self, state: GameState) -> Optional[int]:
        if self._last_c is None:
            return self.lowest_free(state)
        comp = state.cgraph.component_of(self._last_c[0])
        move = self._rule1(state, comp)
        if move is not None:
            return move
        move = self._rule2_move(state)
        if move is not None:
            return move
        move = self._rule3(state, comp)
        if move is not None:
            return move
        return self._arbitrary(state, comp)

    def _rule1(self, state: GameState, comp: set[int]) -> Optional[int]:
        pivot = None
        for e in sorted(self._two_tri):
            a, b = state.edge(e)
            if a in comp:
                pivot = (a, b)
                break
        if pivot is None:
            return None
        v1, v2 = pivot
        lu, lv = self._last_c
        for (end, other) in ((v1, v2), (v2, v1)):
            if end in (lu, lv):
                v = lv if end == lu else lu
                if v not in (v1, v2):
                    t = state.eid(v, other)
                    if state.owner[t] == FREE:
                        return t
        best = None
        cg = state.cgraph
        for v in sorted(comp):
            if v in (v1, v2):
                continue
            if cg.has_edge(v, v1) and not cg.has_edge(v, v2):
                t = state.eid(v, v2)
                if state.owner[t] == FREE and (best is None or t < best):
                    best = t
            if cg.has_edge(v, v2) and not cg.has_edge(v, v1):
                t = state.eid(v, v1)
                if state.owner[t] == FREE and (best is None or t < best):
                    best = t
        if best is not None:
            return best
        return self._arbitrary(state, comp)

    def _rule2_move(self, state: GameState) -> Optional[int]:
        cg = state.cgraph
        best = None
        best_key = None
        for (a, b) in self._rule2:
            e = state.eid(a, b)
            if state.owner[e] != FREE:
                continue
            key = (-max(cg.degree(a), cg.degree(b)), e)
            if best_key is None or key < best_key:
                best, best_key = e, key
        return best

    def _rule3(self, state: GameState, comp: set[int]) -> Optional[int]:
        cg = state.cgraph
        lu, lv = self._last_c
        # adjacent-to-last-move closers first: generated locally
        best = None
        for a in (lu, lv):
            for w in cg.neighbors(a):
                for x in cg.neighbors(w):
                    if x == a or cg.has_edge(a, x):
                        continue
                    e = state.eid(a, x)
                    if state.owner[e] == FREE and (best is None or e < best):
                        best = e
        if best is not None:
            return best
        # otherwise the lowest closer inside the component (lazy heap;
        # out-of-component pops are pushed back)
        popped = []
        found = None
        while self._closers:
            e = heapq.heappop(self._closers)
            if state.owner[e] != FREE:
                continue
            a, b = state.edge(e)
            if a in comp and b in comp:
                found = e
                break
            popped.append(e)
        for e in popped:
            heapq.heappush(self._closers, e)
        return found

    def _arbitrary(self, state: GameState, comp: set[int]) -> Optional[int]:
        move = self.lowest_free_among(state, comp)
        if move is not None:
            return move
        return self.lowest_free(state)
