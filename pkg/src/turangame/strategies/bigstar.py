"""Constructor for forbidden stars of growing size.

With maximum degree capped at k, Constructor repeatedly secures stars
with k leaves from pools of 2k+1 fresh vertices (Blocker can spoil at
most one spoke per round, so half the pool always suffices), then plays
the triangle-weight greedy inside each leaf clique as an independent
sub-game: whenever Blocker claims an edge between leaves of a star,
Constructor answers inside that star.
"""

from __future__ import annotations

import math
from typing import Optional

from ..constraints import ConstraintKind
from ..engine import FREE, OWNER_B, OWNER_C, GameState, Player
from .base import Strategy, StrategyConfigError
from .potential import TrianglePotential


class ConstructorSk(Strategy):
    id = "c-sk"
    allowed_side = Player.CONSTRUCTOR
    supported_kinds = frozenset({ConstraintKind.FORBID_STAR})

    def __init__(self, side, config):
        super().__init__(side, config)
        if config.constraint.k is None or config.constraint.k < 4:
            raise StrategyConfigError("c-sk needs a forbidden star of size >= 4")
        self.k = config.constraint.k - 1  # star size = max legal degree
        self.stars: list[dict] = []
        self.leaf2star: dict[int, int] = {}
        self._building: Optional[dict] = None
        self._respond_star: Optional[int] = None
        self._no_more_stars = False

    # -- bookkeeping ----------------------------------------------------------

    def observe(self, state, mover, eid, passed):
        u, v = state.edge(eid)
        si, sj = self.leaf2star.get(u), self.leaf2star.get(v)
        if si is not None and si == sj:
            star = self.stars[si]
            star["pot"].claim(u, v, OWNER_C if mover is Player.CONSTRUCTOR else OWNER_B)
            if mover is Player.BLOCKER:
                self._respond_star = si

    def _finish_star(self, state: GameState) -> None:
        b = self._building
        self._building = None
        leaves = b["leaves"]
        if len(leaves) < 3:
            return
        pot = TrianglePotential(state.n, leaves, state.eid)
        bg = state.bgraph
        for i, a in enumerate(leaves):
            for c in leaves[i + 1:]:
                if bg.has_edge(a, c):
                    pot.claim(a, c, OWNER_B)
        idx = len(self.stars)
        self.stars.append({"center": b["center"], "leaves": list(leaves), "pot": pot})
        for leaf in leaves:
            self.leaf2star[leaf] = idx

    def _star_move(self, state: GameState, star: dict) -> Optional[tuple[int, int]]:
        pot: TrianglePotential = star["pot"]

        def usable(e: int) -> bool:
            return state.owner[e] == FREE and state.is_legal_for(Player.CONSTRUCTOR, e)

        move = pot.best(usable)
        if move is None:
            return None
        return (move, pot.gain.get(move, 0))

    def _pick_pool(self, state: GameState) -> Optional[list[int]]:
        """2k+1 vertices isolated in Constructor's graph, pairwise
        non-adjacent in Blocker's (greedy, ascending)."""
        need = 2 * self.k + 1
        bg, cg = state.bgraph, state.cgraph
        chosen: list[int] = []
        for v in range(state.n):
            if cg.degree(v) != 0:
                continue
            if any(bg.has_edge(v, c) for c in chosen):
                continue
            chosen.append(v)
            if len(chosen) == need:
                return chosen
        return None

    def counting_bound_holds(self, state: GameState) -> bool:
        """Pool-existence arithmetic: with ell isolated vertices and at most
        n spoiled pairs, n * C(ell, 2k-1) < C(ell, 2k+1) guarantees a clean
        (2k+1)-subset. Checked when ell is above the activation threshold."""
        k, n = self.k, state.n
        ell = sum(1 for v in range(n) if state.cgraph.degree(v) == 0)
        if ell < 3 * k * math.sqrt(n):
            return True  # below threshold: nothing promised
        if ell < 2 * k + 1:
            return False
        ratio_num = (ell - 2 * k + 1) * (ell - 2 * k)
        ratio_den = (2 * k + 1) * (2 * k)
        return n * ratio_den < ratio_num

    # -- play -------------------------------------------------------------------

    def next_move(self, state: GameState) -> Optional[int]:
        if self._respond_star is not None:
            star = self.stars[self._respond_star]
            self._respond_star = None
            found = self._star_move(state, star)
            if found is not None:
                return found[0]
        if self._building is not None:
            move = self._next_spoke(state)
            if move is not None:
                return move
        if not self._no_more_stars:
            pool = self._pick_pool(state)
            if pool is None:
                self._no_more_stars = True
            else:
                self._building = {"center": pool[0], "pool": pool[1:], "leaves": []}
                return self._next_spoke(state)
        best = None
        best_key = None
        for star in self.stars:
            found = self._star_move(state, star)
            if found is not None:
                move, gain = found
                key = (-gain, move)
                if best_key is None or key < best_key:
                    best, best_key = move, key
        return best

    def _next_spoke(self, state: GameState) -> Optional[int]:
        b = self._building
        center = b["center"]
        while b["pool"] and len(b["leaves"]) < self.k:
            cand = b["pool"].pop(0)
            e = state.eid(center, cand)
            if state.owner[e] == FREE:
                b["leaves"].append(cand)
                return e
        self._finish_star(state)
        return None
