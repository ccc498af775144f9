"""Strategy interface and shared move-picking helpers.

A strategy is bound to one side of one game. The referee calls
`next_move` on its turn and `observe` after every applied move (both
sides', including pass-substituted edges), so private phase memory only
ever evolves through those two entry points.
"""

from __future__ import annotations

import heapq
import random
from typing import Optional

from ..constraints import ConstraintKind
from ..engine import FREE, GameConfig, GameState, Player


class StrategyConfigError(Exception):
    """Strategy asked to play a side or constraint it does not support."""


class Strategy:
    id: str = "?"
    allowed_side: Optional[Player] = None
    supported_kinds: Optional[frozenset] = None  # None = any constraint

    def __init__(self, side: Player, config: GameConfig):
        if self.allowed_side is not None and side is not self.allowed_side:
            raise StrategyConfigError(f"{self.id} plays {self.allowed_side.value} only")
        if self.supported_kinds is not None and config.constraint.kind not in self.supported_kinds:
            raise StrategyConfigError(
                f"{self.id} does not support constraint {config.constraint.name}"
            )
        self.side = side
        self.config = config
        self.rng = random.Random(f"{config.seed}:{self.id}:{side.value}")

    def next_move(self, state: GameState) -> Optional[int]:
        raise NotImplementedError

    def observe(self, state: GameState, mover: Player, eid: int, passed: bool) -> None:
        pass

    def choose_among(self, state: GameState, candidates: list[int]) -> int:
        """Pick from a restricted candidate set (same-component wrapper)."""
        return min(candidates)

    # -- helpers -------------------------------------------------------------

    def lowest_free(self, state: GameState) -> Optional[int]:
        # claims are permanent, so a pointer skips the settled prefix
        ptr = getattr(self, "_free_ptr", 0)
        owner = state.owner
        while ptr < state.m and owner[ptr] != FREE:
            ptr += 1
        self._free_ptr = ptr
        return ptr if ptr < state.m else None

    def lowest_free_among(self, state: GameState, vertices) -> Optional[int]:
        verts = sorted(vertices)
        best = None
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                e = state.eid(u, v)
                if state.owner[e] == FREE and (best is None or e < best):
                    best = e
        return best


class LegalScanner:
    """Lowest-id legal Constructor edge with monotone illegal caching."""

    def __init__(self, m: int):
        self._ptr = 0
        self._illegal = bytearray(m)

    def lowest_legal(self, state: GameState) -> Optional[int]:
        owner = state.owner
        illegal = self._illegal
        e = self._ptr
        while e < state.m:
            if owner[e] == FREE and not illegal[e]:
                if state.is_legal_for(Player.CONSTRUCTOR, e):
                    self._ptr = e
                    return e
                illegal[e] = 1
            e += 1
        self._ptr = state.m
        return None

    def mark_illegal(self, eid: int) -> None:
        self._illegal[eid] = 1

    def is_marked(self, eid: int) -> bool:
        return bool(self._illegal[eid])


class FreePool:
    """Uniform sampling over free edges that stays cheap as the board fills.

    High density: rejection sampling over raw edge ids. Low density: a
    materialized free list maintained by swap-removal on every observe.
    """

    def __init__(self, m: int):
        self.m = m
        self._list: Optional[list[int]] = None
        self._pos: dict[int, int] = {}

    def on_claim(self, eid: int) -> None:
        if self._list is None:
            return
        pos = self._pos.pop(eid, None)
        if pos is None:
            return
        last = self._list.pop()
        if last != eid:
            self._list[pos] = last
            self._pos[last] = pos

    def sample(self, state: GameState, rng: random.Random) -> Optional[int]:
        if state.free_count == 0:
            return None
        if self._list is None:
            if state.free_count * 64 >= self.m:
                while True:
                    e = rng.randrange(self.m)
                    if state.owner[e] == FREE:
                        return e
            self._list = [e for e in range(self.m) if state.owner[e] == FREE]
            self._pos = {e: i for i, e in enumerate(self._list)}
        return self._list[rng.randrange(len(self._list))]


class ComponentTracker:
    """Constructor-component membership with sorted member lists.

    Feed every Constructor claim via `union`; components only merge, so
    an exhausted-component latch (no free internal pair) stays valid
    until the next merge touching it.
    """

    def __init__(self, n: int):
        self.n = n
        self._dsu = list(range(n))
        self._members: dict[int, list[int]] = {v: [v] for v in range(n)}
        self._exhausted: set[int] = set()

    def find(self, x: int) -> int:
        dsu = self._dsu
        root = x
        while dsu[root] != root:
            root = dsu[root]
        while dsu[x] != root:
            dsu[x], x = root, dsu[x]
        return root

    def union(self, u: int, v: int) -> None:
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return
        if len(self._members[ru]) < len(self._members[rv]):
            ru, rv = rv, ru
        self._dsu[rv] = ru
        self._members[ru] = list(heapq.merge(self._members[ru], self._members[rv]))
        del self._members[rv]
        self._exhausted.discard(ru)
        self._exhausted.discard(rv)

    def members(self, v: int) -> list[int]:
        return self._members[self.find(v)]

    def lowest_free_inside(self, state: GameState, v: int) -> Optional[int]:
        """Lowest-id free edge with both endpoints in v's component."""
        root = self.find(v)
        if root in self._exhausted:
            return None
        comp = self._members[root]
        owner = state.owner
        n = state.n
        for i, a in enumerate(comp):
            base = a * (2 * n - a - 1) // 2 - a - 1
            for b in comp[i + 1:]:
                if owner[base + b] == FREE:
                    return base + b
        self._exhausted.add(root)
        return None

    def sample_free_inside(self, state: GameState, v: int, rng: random.Random) -> Optional[int]:
        """Uniform free internal pair; rejection sampling on big components."""
        root = self.find(v)
        if root in self._exhausted:
            return None
        comp = self._members[root]
        size = len(comp)
        if size * (size - 1) // 2 <= 4000:
            owner = state.owner
            n = state.n
            pool = []
            for i, a in enumerate(comp):
                base = a * (2 * n - a - 1) // 2 - a - 1
                pool.extend(base + b for b in comp[i + 1:] if owner[base + b] == FREE)
            if not pool:
                self._exhausted.add(root)
                return None
            return rng.choice(pool)
        for _ in range(200):
            a, b = rng.sample(comp, 2)
            e = state.eid(a, b)
            if state.owner[e] == FREE:
                return e
        # sparse tail: fall back to the lowest free internal edge
        return self.lowest_free_inside(state, v)


NONE_ONLY = frozenset({ConstraintKind.NONE})
EMBEDDED_ONLY = frozenset({ConstraintKind.EMBEDDED})
