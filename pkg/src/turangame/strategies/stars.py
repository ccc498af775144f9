"""Strategies for the forbidden-star games.

Constructor side: farm isolated cherries with a two-threat trick, then
absorb them one by one into a chain of triangles hanging off a
degree-one tail vertex (max degree three). With one more unit of degree
headroom the chain triangles can additionally be paired up, two bonus
triangles per pair, without ever exceeding degree four.

Blocker side: answer in Constructor's latest component, claiming the
free triangle-completing edge of smallest priority number. The S4
ladder prevents any diamond; the S5 ladder prevents any K4.
"""

from __future__ import annotations

import math
from typing import Optional

from ..constraints import ConstraintKind
from ..engine import FREE, GameState, Player
from .base import ComponentTracker, Strategy, StrategyConfigError


# ---------------------------------------------------------------------------
# Shared chain machine (Constructor)
# ---------------------------------------------------------------------------

class ChainMachine:
    """Cherry farm plus triangle chain; degree never exceeds three."""

    def __init__(self, n: int):
        self.n = n
        self.sqrt_n = math.sqrt(n)
        self.stage = "cherry"
        self.isolated = n
        self.cherries: list[dict] = []
        self.vert2cherry: dict[int, int] = {}
        self.x: Optional[int] = None
        self.chain_len = 0
        self.triangles: list[tuple[int, int, int]] = []
        self._plan: Optional[dict] = None
        self.done = False

    # -- observation ----------------------------------------------------------

    def observe(self, state: GameState, mover: Player, eid: int) -> None:
        u, v = state.edge(eid)
        if mover is Player.CONSTRUCTOR:
            cg = state.cgraph
            if cg.degree(u) == 1:
                self.isolated -= 1
            if cg.degree(v) == 1:
                self.isolated -= 1
        else:
            ci = self.vert2cherry.get(u)
            cj = self.vert2cherry.get(v)
            if ci is not None and cj is not None and ci != cj:
                self.cherries[ci]["conflicts"].add(cj)
                self.cherries[cj]["conflicts"].add(ci)

    # -- helpers ----------------------------------------------------------------

    def _register_cherry(self, root: int, l1: int, l2: int) -> None:
        idx = len(self.cherries)
        self.cherries.append({
            "root": root, "leaves": (l1, l2),
            "conflicts": set(), "absorbed": False,
        })
        for w in (root, l1, l2):
            self.vert2cherry[w] = idx

    def _pick_triple(self, state: GameState) -> Optional[list[int]]:
        """Three C-isolated vertices pairwise non-adjacent in Blocker's graph."""
        bg = state.bgraph
        cg = state.cgraph
        pool = [v for v in range(self.n) if cg.degree(v) == 0]
        chosen: list[int] = []

        def pick(start: int) -> bool:
            if len(chosen) == 3:
                return True
            for i in range(start, len(pool)):
                cand = pool[i]
                if all(not bg.has_edge(cand, c) for c in chosen):
                    chosen.append(cand)
                    if pick(i + 1):
                        return True
                    chosen.pop()
            return False

        return chosen if pick(0) else None

    def _cherry_count_at(self, state: GameState, v: int) -> int:
        seen = set()
        for w in state.bgraph.neighbors(v):
            idx = self.vert2cherry.get(w)
            if idx is not None:
                seen.add(idx)
        return len(seen)

    def _eligible_cherry(self, state: GameState) -> Optional[int]:
        bg = state.bgraph
        for idx, ch in enumerate(self.cherries):
            if ch["absorbed"]:
                continue
            if len(ch["conflicts"]) >= self.sqrt_n:
                continue
            root, (l1, l2) = ch["root"], ch["leaves"]
            if bg.has_edge(self.x, root) or bg.has_edge(self.x, l1) or bg.has_edge(self.x, l2):
                continue
            return idx
        return None

    # -- play -------------------------------------------------------------------

    def next_move(self, state: GameState) -> Optional[int]:
        if self.done:
            return None
        if self._plan is not None:
            return self._continue_plan(state)
        if self.stage == "cherry":
            if self.isolated >= 3 * self.sqrt_n:
                triple = self._pick_triple(state)
                if triple is not None:
                    self._plan = {"kind": "cherry", "verts": triple, "step": 0}
                    return self._continue_plan(state)
            self.stage = "chain"
        # chain stage
        if self.x is None:
            self.x = self._pick_tail(state)
            if self.x is None:
                self.done = True
                return None
        idx = self._eligible_cherry(state)
        if idx is None:
            self.done = True
            return None
        self._plan = {"kind": "absorb", "cherry": idx, "step": 0}
        return self._continue_plan(state)

    def _pick_tail(self, state: GameState) -> Optional[int]:
        cg = state.cgraph
        cap = self.sqrt_n + 2
        for v in range(self.n):
            if cg.degree(v) == 0 and self._cherry_count_at(state, v) <= cap:
                return v
        return None

    def _continue_plan(self, state: GameState) -> Optional[int]:
        plan = self._plan
        if plan["kind"] == "cherry":
            v1, v2, v3 = plan["verts"]
            if plan["step"] == 0:
                plan["step"] = 1
                return state.eid(v1, v2)
            self._plan = None
            if state.bgraph.has_edge(v1, v3):
                self._register_cherry(v2, v1, v3)
                return state.eid(v2, v3)
            self._register_cherry(v1, v2, v3)
            return state.eid(v1, v3)
        # absorb
        ch = self.cherries[plan["cherry"]]
        root, (l1, l2) = ch["root"], ch["leaves"]
        if plan["step"] == 0:
            plan["step"] = 1
            return state.eid(self.x, root)
        self._plan = None
        bg = state.bgraph
        if bg.has_edge(self.x, l1):
            used, tail = l2, l1
        elif bg.has_edge(self.x, l2):
            used, tail = l1, l2
        else:
            used, tail = min(l1, l2), max(l1, l2)
        ch["absorbed"] = True
        self.triangles.append((self.x, root, used))
        self.chain_len += 1
        move = state.eid(self.x, used)
        self.x = tail
        return move


class ConstructorS4(Strategy):
    """Cherry farm plus chain; one triangle per three vertices."""

    id = "c-s4"
    allowed_side = Player.CONSTRUCTOR
    supported_kinds = frozenset({ConstraintKind.FORBID_STAR})

    def __init__(self, side, config):
        super().__init__(side, config)
        if config.constraint.k != 4:
            raise StrategyConfigError("c-s4 plays the forbidden-S4 game only")
        self.machine = ChainMachine(config.n)

    def observe(self, state, mover, eid, passed):
        self.machine.observe(state, mover, eid)

    def next_move(self, state):
        return self.machine.next_move(state)

    @property
    def chain_length(self) -> int:
        return self.machine.chain_len


class ConstructorS5(Strategy):
    """Chain first, then pair chain triangles for two bonus triangles each."""

    id = "c-s5"
    allowed_side = Player.CONSTRUCTOR
    supported_kinds = frozenset({ConstraintKind.FORBID_STAR})

    def __init__(self, side, config):
        super().__init__(side, config)
        if config.constraint.k != 5:
            raise StrategyConfigError("c-s5 plays the forbidden-S5 game only")
        self.machine = ChainMachine(config.n)
        self.records: Optional[list[dict]] = None
        self.vert2tri: dict[int, int] = {}
        self.conflicts: list[set[int]] = []
        self.paired: list[bool] = []
        self._plan: Optional[dict] = None
        self._pending_b: list[tuple[int, int]] = []

    def observe(self, state, mover, eid, passed):
        self.machine.observe(state, mover, eid)
        if mover is Player.BLOCKER:
            u, v = state.edge(eid)
            if self.records is None:
                self._pending_b.append((u, v))
            else:
                self._record_conflict(u, v)

    def _record_conflict(self, u, v):
        ti, tj = self.vert2tri.get(u), self.vert2tri.get(v)
        if ti is not None and tj is not None and ti != tj:
            self.conflicts[ti].add(tj)
            self.conflicts[tj].add(ti)

    def _build_records(self, state: GameState) -> None:
        cg = state.cgraph
        self.records = []
        for (a, b, c) in self.machine.triangles:
            tri = sorted((a, b, c))
            deg2 = [v for v in tri if cg.degree(v) == 2]
            s = deg2[0] if deg2 else tri[0]
            others = [v for v in tri if v != s]
            rec = {"s": s, "l": others[0], "r": others[1]}
            idx = len(self.records)
            self.records.append(rec)
            for v in tri:
                self.vert2tri[v] = idx
        self.conflicts = [set() for _ in self.records]
        self.paired = [False] * len(self.records)
        for (u, v) in self._pending_b:
            self._record_conflict(u, v)
        self._pending_b.clear()

    def unpaired_count(self) -> int:
        if self.records is None:
            return len(self.machine.triangles)
        return sum(1 for p in self.paired if not p)

    def _select_pair(self, state: GameState) -> Optional[tuple[int, int]]:
        unpaired = [i for i, p in enumerate(self.paired) if not p]
        for ai, i in enumerate(unpaired):
            conf = self.conflicts[i]
            for j in unpaired[ai + 1:]:
                if j not in conf:
                    return (i, j)
        return None

    def next_move(self, state: GameState) -> Optional[int]:
        if self.records is None:
            move = self.machine.next_move(state)
            if move is not None:
                return move
            self._build_records(state)
        if self._plan is not None:
            return self._continue_pairing(state)
        pair = self._select_pair(state)
        if pair is None:
            return None
        i, j = pair
        ri, rj = self.records[i], self.records[j]
        groups = [
            [(ri["s"], rj["l"]), (ri["s"], rj["r"])],
            [(rj["s"], ri["l"]), (rj["s"], ri["r"])],
        ]
        self._plan = {"i": i, "j": j, "groups": groups, "step": 0}
        return state.eid(ri["s"], rj["s"])

    def _continue_pairing(self, state: GameState) -> Optional[int]:
        plan = self._plan
        groups = plan["groups"]
        move = None
        hit_index = None
        for gi, group in enumerate(groups):
            if any(state.owner[state.eid(a, b)] != FREE for (a, b) in group):
                hit_index = gi
                break
        if hit_index is not None:
            # Blocker claimed one side of a pair; answer with the other
            group = groups.pop(hit_index)
            rest = [state.eid(a, b) for (a, b) in group
                    if state.owner[state.eid(a, b)] == FREE]
            move = rest[0] if rest else None
        else:
            group = groups.pop(0)
            free = [state.eid(a, b) for (a, b) in group
                    if state.owner[state.eid(a, b)] == FREE]
            move = min(free) if free else None
        if not groups:
            self.paired[plan["i"]] = True
            self.paired[plan["j"]] = True
            self._plan = None
        if move is None:
            self._plan = None
            return self.next_move(state)
        return move


# ---------------------------------------------------------------------------
# Priority blockers
# ---------------------------------------------------------------------------

def _merge_sorted(a: list[int], b: list[int]):
    return heapq.merge(a, b)

class _PriorityBlocker(Strategy):
    allowed_side = Player.BLOCKER
    max_end_degree = 2

    def __init__(self, side, config):
        super().__init__(side, config)
        self._last_c: Optional[tuple[int, int]] = None
        self._last_delta = 0
        # component tracking for the "arbitrary edge in Constructor's
        # component" fallback (edge-id order with early exit)
        self._tracker = ComponentTracker(config.n)

    def observe(self, state, mover, eid, passed):
        if mover is not Player.CONSTRUCTOR:
            return
        u, v = state.edge(eid)
        self._last_c = (u, v)
        self._last_delta = state.cgraph.adj.common_count(u, v)
        self._tracker.union(u, v)

    def _restricted_free(self, state: GameState, a: int, b: int) -> bool:
        if state.owner[state.eid(a, b)] != FREE:
            return False
        cg = state.cgraph
        da, db = cg.degree(a), cg.degree(b)
        cap = self.max_end_degree
        return 1 <= da <= cap and 1 <= db <= cap

    def priority(self, state: GameState, a: int, b: int) -> int:
        raise NotImplementedError

    def _completions_with(self, state: GameState, u: int, v: int):
        cg = state.cgraph
        out = []
        for w in cg.neighbors(v):
            if w != u and not cg.has_edge(u, w) and self._restricted_free(state, u, w):
                out.append((u, w))
        for w in cg.neighbors(u):
            if w != v and not cg.has_edge(v, w) and self._restricted_free(state, v, w):
                out.append((v, w))
        return out

    def _best(self, state: GameState, cands) -> Optional[int]:
        best = None
        best_key = None
        for (a, b) in cands:
            e = state.eid(a, b)
            key = (self.priority(state, a, b), e)
            if best_key is None or key < best_key:
                best, best_key = e, key
        return best

    def _arbitrary(self, state: GameState) -> Optional[int]:
        if self._last_c is not None:
            move = self._tracker.lowest_free_inside(state, self._last_c[0])
            if move is not None:
                return move
        return self.lowest_free(state)

    def next_move(self, state: GameState) -> Optional[int]:
        if self._last_c is None:
            return self.lowest_free(state)
        u, v = self._last_c
        cands = self._completions_with(state, u, v)
        if cands:
            return self._best(state, cands)
        move = self._fallback(state, u, v)
        if move is not None:
            return move
        return self._arbitrary(state)

    def _fallback(self, state, u, v) -> Optional[int]:
        return None


class BlockerS4(_PriorityBlocker):
    """Priority ladder that keeps Constructor's graph diamond-free."""

    id = "b-s4"
    max_end_degree = 2

    def priority(self, state, a, b):
        cg = state.cgraph
        if cg.adj.common_count(a, b) >= 2:
            return 1
        da, db = cg.degree(a), cg.degree(b)
        if da == 1 and db == 1:
            return 2
        if (da == 1) != (db == 1):
            return 3
        return 4

    def _fallback(self, state, u, v):
        # Constructor just closed triangle(s) on (u, v); block an edge that
        # would complete a triangle sharing an edge with one of them.
        if self._last_delta == 0:
            return None
        cg = state.cgraph
        cands = []
        for w in cg.common_neighbors(u, v):
            tri = (u, v, w)
            for (a, b) in ((u, v), (u, w), (v, w)):
                for x in cg.neighbors(a):
                    if x in tri:
                        continue
                    if not cg.has_edge(b, x) and self._restricted_free(state, b, x):
                        cands.append((b, x))
                for x in cg.neighbors(b):
                    if x in tri:
                        continue
                    if not cg.has_edge(a, x) and self._restricted_free(state, a, x):
                        cands.append((a, x))
        if not cands:
            return None
        return self._best(state, cands)


class BlockerS5NoK4(_PriorityBlocker):
    """Priority ladder that keeps Constructor's graph K4-free.

    Priority (4) reads both endpoint degrees by default; set
    `degree_check_u_only` for the literal single-endpoint reading.
    """

    id = "b-s5"
    max_end_degree = 3
    degree_check_u_only = False

    def priority(self, state, a, b):
        cg = state.cgraph
        common = cg.common_neighbors(a, b)
        cnt = len(common)
        if cnt >= 3:
            for i, w in enumerate(common):
                for x in common[i + 1:]:
                    if cg.has_edge(w, x):
                        return 1
            return 0
        if cnt == 2:
            return 2
        if any(cg.adj.common_count(a, w) >= 2 or cg.adj.common_count(b, w) >= 2
               for w in common):
            return 3
        da, db = cg.degree(a), cg.degree(b)
        if da <= 2 and (self.degree_check_u_only or db <= 2):
            return 4
        return 5
