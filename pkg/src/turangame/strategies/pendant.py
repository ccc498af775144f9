"""Four-move gadget: a triangle with a pendant leg from five fresh vertices.

Given five vertices isolated in Constructor's graph with no Blocker edge
among them, Constructor forces a triangle plus one extra edge within
four of her moves while keeping her maximum degree at three. The trick
is threat doubling: she cannot win a bare triangle race, but she can
pose two completions at once and Blocker only answers one.
"""

from __future__ import annotations

from typing import Optional

from ..constraints import ConstraintKind
from ..engine import FREE, GameState, Player
from .base import Strategy


class PlanFailed(Exception):
    """A gadget precondition was violated mid-plan."""


class PendantLegPlan:
    """Step machine over five role slots r0..r4.

    Moves: r0r1, then r0r2; if Blocker answered r1r2 the triangle shifts
    to r3 (two symmetric completions), otherwise r1r2 closes it and any
    free connector to {r3, r4} adds the leg. The first Blocker edge
    inside the five-set is relabelled onto slot r4, which no main line
    touches.
    """

    def __init__(self, vertices: list[int]):
        if len(vertices) != 5:
            raise ValueError("plan needs exactly five vertices")
        self.r = list(vertices)
        self.step = 0
        self.branch: Optional[str] = None
        self.done = False
        self.triangle: Optional[tuple[int, int, int]] = None
        self.pendant: Optional[tuple[int, int]] = None

    def on_blocker(self, state: GameState, u: int, v: int) -> None:
        if self.step != 1:
            return
        r = self.r
        inside = set(r)
        if u not in inside or v not in inside:
            return
        if r[4] in (u, v):
            return
        p = u if u not in (r[0], r[1]) else v
        i = r.index(p)
        r[i], r[4] = r[4], r[i]

    def _free(self, state: GameState, a: int, b: int) -> bool:
        return state.owner[state.eid(a, b)] == FREE

    def next_move(self, state: GameState) -> int:
        r = self.r
        if self.step == 0:
            self.step = 1
            return state.eid(r[0], r[1])
        if self.step == 1:
            if not self._free(state, r[0], r[2]):
                raise PlanFailed("second spoke blocked")
            self.step = 2
            return state.eid(r[0], r[2])
        if self.step == 2:
            self.step = 3
            if state.bgraph.has_edge(r[1], r[2]):
                self.branch = "shift"
                if not self._free(state, r[0], r[3]):
                    raise PlanFailed("shift spoke blocked")
                return state.eid(r[0], r[3])
            self.branch = "close"
            if not self._free(state, r[1], r[2]):
                raise PlanFailed("closing edge blocked")
            return state.eid(r[1], r[2])
        if self.step == 3:
            self.step = 4
            self.done = True
            if self.branch == "shift":
                for x in (r[1], r[2]):
                    if self._free(state, x, r[3]):
                        self.triangle = (r[0], x, r[3])
                        other = r[2] if x == r[1] else r[1]
                        self.pendant = (r[0], other)
                        return state.eid(x, r[3])
                raise PlanFailed("both completions blocked")
            self.triangle = (r[0], r[1], r[2])
            best = None
            for a in (r[0], r[1], r[2]):
                for b in (r[3], r[4]):
                    if self._free(state, a, b):
                        e = state.eid(a, b)
                        if best is None or e < best:
                            best = e
            if best is None:
                raise PlanFailed("all pendant connectors blocked")
            u, v = state.edge(best)
            self.pendant = (u, v) if u in self.triangle else (v, u)
            return best
        raise PlanFailed("plan already complete")


class PendantLeg(Strategy):
    """Standalone wrapper: runs the gadget once on the lowest five fresh
    vertices, then passes. Not for embedded games: the gadget picks its
    completion edges combinatorially and one of them may cross."""

    id = "pendant-leg"
    allowed_side = Player.CONSTRUCTOR
    supported_kinds = frozenset(
        k for k in ConstraintKind if k is not ConstraintKind.EMBEDDED
    )

    def __init__(self, side, config):
        super().__init__(side, config)
        self._plan: Optional[PendantLegPlan] = None
        self._gave_up = False

    def observe(self, state, mover, eid, passed):
        if self._plan is not None and mover is Player.BLOCKER:
            self._plan.on_blocker(state, *state.edge(eid))

    def next_move(self, state: GameState) -> Optional[int]:
        if self._gave_up:
            return None
        if self._plan is None:
            verts = pick_fresh_five(state)
            if verts is None:
                self._gave_up = True
                return None
            self._plan = PendantLegPlan(verts)
        if self._plan.done:
            return None
        return self._plan.next_move(state)


def pick_fresh_five(state: GameState) -> Optional[list[int]]:
    """Greedy lowest five vertices isolated in Constructor's graph with no
    Blocker edge among them (Blocker edges leaving the set are harmless)."""
    chosen: list[int] = []
    bg = state.bgraph
    for v in range(state.n):
        if state.cgraph.degree(v) != 0:
            continue
        if any(bg.has_edge(v, c) for c in chosen):
            continue
        chosen.append(v)
        if len(chosen) == 5:
            return chosen
    return None
