"""Blocker wrapper: answer inside Constructor's latest component.

Whenever any free edge has both endpoints in the component Constructor
just extended, the wrapped strategy must pick from those; otherwise it
plays unrestricted. Guarantees the per-component claim deficit audited
by the harness: a final Constructor component on r vertices misses at
least (C(r,2) - floor(r/2)) / 2 of its internal edges.
"""

from __future__ import annotations

from typing import Optional

from ..engine import FREE, GameState, Player
from .base import ComponentTracker, Strategy
from .baselines import RandomStrategy

MATERIALIZE_LIMIT = 120  # component size up to which candidates are listed


class SameComponentBlocker(Strategy):
    id = "samecc"
    allowed_side = Player.BLOCKER

    def __init__(self, side, config, inner: Strategy):
        super().__init__(side, config)
        self.inner = inner
        self.id = f"samecc:{inner.id}"
        self._last_c: Optional[int] = None
        self._tracker = ComponentTracker(config.n)

    def observe(self, state, mover, eid, passed):
        if mover is Player.CONSTRUCTOR:
            self._last_c = eid
            self._tracker.union(*state.edge(eid))
        self.inner.observe(state, mover, eid, passed)

    def next_move(self, state: GameState) -> Optional[int]:
        if self._last_c is not None:
            u, _ = state.edge(self._last_c)
            move = self._restricted(state, u)
            if move is not None:
                return move
        return self.inner.next_move(state)

    def _restricted(self, state: GameState, u: int) -> Optional[int]:
        tracker = self._tracker
        if isinstance(self.inner, RandomStrategy):
            return tracker.sample_free_inside(state, u, self.inner.rng)
        comp = tracker.members(u)
        if len(comp) <= MATERIALIZE_LIMIT:
            candidates = []
            owner = state.owner
            for i, a in enumerate(comp):
                for b in comp[i + 1:]:
                    e = state.eid(a, b)
                    if owner[e] == FREE:
                        candidates.append(e)
            if not candidates:
                return None
            return self.inner.choose_among(state, candidates)
        # big component: the default tie-break (lowest id) without listing
        return tracker.lowest_free_inside(state, u)
