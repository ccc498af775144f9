"""Exact game values by memoized minimax over ternary edge states.

Ground truth for the engine and the strategies at small n: Constructor
maximizes the final count of her target cliques, Blocker minimizes, she
moves under the constraint and never passes voluntarily; the game ends
with a full board or a stuck Constructor.

The transposition key is the base-3 ownership vector (side to move is
implied by the claim counts). Optional canonicalization minimizes the
key over all vertex relabelings, which is what lifts the practical cap
from n = 6 to n = 7.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from . import constraints as _c
from .engine import FREE, OWNER_B, OWNER_C, GameConfig, Player
from .graphcore import Graph, edge_endpoints, num_edges

HARD_CAP = 6
CANONICAL_CAP = 7

EXACT, LOWER, UPPER = 0, 1, 2


class CapacityError(Exception):
    """Board too large for exact solving."""


@dataclass
class SolveReport:
    config: GameConfig
    value: int
    nodes: int
    table_size: int
    principal_variation: list[int]
    canonicalized: bool = False


class _Position:
    """Mutable search position with undo."""

    def __init__(self, config: GameConfig):
        self.config = config
        self.n = config.n
        self.m = num_edges(config.n)
        self.owner = [FREE] * self.m
        self.cgraph = Graph(config.n, track_k4=config.target == "K4")
        self.bgraph = Graph(config.n)
        self.c_count = 0
        self.b_count = 0
        self.ends = [edge_endpoints(config.n, e) for e in range(self.m)]

    def to_move(self) -> Player:
        if self.config.first_player is Player.CONSTRUCTOR:
            return Player.CONSTRUCTOR if self.c_count == self.b_count else Player.BLOCKER
        return Player.BLOCKER if self.b_count == self.c_count else Player.CONSTRUCTOR

    def score(self) -> int:
        return self.cgraph.score(self.config.target)

    def free_edges(self) -> list[int]:
        return [e for e in range(self.m) if self.owner[e] == FREE]

    def legal_constructor(self) -> list[int]:
        cons = self.config.constraint
        out = []
        for e in range(self.m):
            if self.owner[e] == FREE:
                u, v = self.ends[e]
                if _c.is_legal(cons, self.cgraph, u, v):
                    out.append(e)
        return out

    def do(self, e: int, player: Player) -> None:
        u, v = self.ends[e]
        if player is Player.CONSTRUCTOR:
            self.owner[e] = OWNER_C
            self.cgraph.add_edge(u, v)
            self.c_count += 1
        else:
            self.owner[e] = OWNER_B
            self.bgraph.add_edge(u, v)
            self.b_count += 1

    def undo(self, e: int, player: Player) -> None:
        u, v = self.ends[e]
        self.owner[e] = FREE
        if player is Player.CONSTRUCTOR:
            self.cgraph.remove_edge(u, v)
            self.c_count -= 1
        else:
            self.bgraph.remove_edge(u, v)
            self.b_count -= 1

    def key(self) -> int:
        k = 0
        for o in self.owner:
            k = k * 3 + o
        return k


def _perm_tables(n: int) -> list[list[int]]:
    """For each vertex permutation, the induced edge-id permutation."""
    from .graphcore import edge_id

    tables = []
    for perm in permutations(range(n)):
        table = [0] * num_edges(n)
        for e in range(num_edges(n)):
            u, v = edge_endpoints(n, e)
            table[e] = edge_id(n, perm[u], perm[v])
        tables.append(table)
    return tables


class _Solver:
    def __init__(self, config: GameConfig, canonicalize: bool):
        self.pos = _Position(config)
        self.canonicalize = canonicalize
        self.table: dict[int, tuple[int, int]] = {}
        self.nodes = 0
        self.perms = _perm_tables(config.n) if canonicalize else None

    def _key(self) -> int:
        owner = self.pos.owner
        if not self.canonicalize:
            return self.pos.key()
        best: Optional[int] = None
        m = self.pos.m
        for table in self.perms:
            k = 0
            for e in range(m):
                k = k * 3 + owner[table[e]]
            if best is None or k < best:
                best = k
        return best

    def search(self, alpha: int, beta: int) -> int:
        self.nodes += 1
        pos = self.pos
        side = pos.to_move()
        if side is Player.CONSTRUCTOR:
            moves = pos.legal_constructor()
            if not moves:
                return pos.score()
        else:
            moves = pos.free_edges()
            if not moves:
                return pos.score()
        key = self._key()
        hit = self.table.get(key)
        if hit is not None:
            flag, val = hit
            if flag == EXACT:
                return val
            if flag == LOWER:
                alpha = max(alpha, val)
            else:
                beta = min(beta, val)
            if alpha >= beta:
                return val
        alpha0, beta0 = alpha, beta
        cg = pos.cgraph
        deltas = []
        for e in moves:
            u, v = pos.ends[e]
            deltas.append((cg.adj.common_count(u, v), e))
        if side is Player.CONSTRUCTOR:
            deltas.sort(key=lambda t: (-t[0], t[1]))
            best = -1
            for _, e in deltas:
                pos.do(e, side)
                val = self.search(alpha, beta)
                pos.undo(e, side)
                if val > best:
                    best = val
                alpha = max(alpha, best)
                if alpha >= beta:
                    break
        else:
            deltas.sort(key=lambda t: (t[0], t[1]))
            best = None
            for _, e in deltas:
                pos.do(e, side)
                val = self.search(alpha, beta)
                pos.undo(e, side)
                if best is None or val < best:
                    best = val
                beta = min(beta, best)
                if alpha >= beta:
                    break
        if best <= alpha0:
            flag = UPPER
        elif best >= beta0:
            flag = LOWER
        else:
            flag = EXACT
        self.table[key] = (flag, best)
        return best


def solve_exact(config: GameConfig, canonicalize: bool = False) -> SolveReport:
    """Game value under optimal play, with principal variation."""
    cap = CANONICAL_CAP if canonicalize else HARD_CAP
    if config.n > cap:
        raise CapacityError(
            f"n={config.n} exceeds the exact-solve cap ({cap}"
            f"{' with' if canonicalize else ' without'} canonicalization)"
        )
    if canonicalize and config.constraint.kind is _c.ConstraintKind.EMBEDDED:
        raise CapacityError("embedded legality is not relabeling-invariant; "
                            "canonicalization unavailable")
    solver = _Solver(config, canonicalize)
    upper = num_edges(config.n) ** 3  # any bound above C(n,3) works
    value = solver.search(-1, upper)
    pv = _principal_variation(solver, value)
    return SolveReport(
        config=config,
        value=value,
        nodes=solver.nodes,
        table_size=len(solver.table),
        principal_variation=pv,
        canonicalized=canonicalize,
    )


def _principal_variation(solver: _Solver, value: int) -> list[int]:
    """Greedy walk: at each node pick the lowest move whose subtree value
    matches the node value (full-window re-searches; the table makes
    them cheap)."""
    pos = solver.pos
    pv: list[int] = []
    upper = num_edges(pos.config.n) ** 3
    current = value
    while True:
        side = pos.to_move()
        moves = pos.legal_constructor() if side is Player.CONSTRUCTOR else pos.free_edges()
        if not moves:
            break
        chosen = None
        for e in sorted(moves):
            pos.do(e, side)
            val = solver.search(-1, upper)
            if val == current:
                chosen = e
                pv.append(e)
                break
            pos.undo(e, side)
        if chosen is None:  # should not happen; bail out defensively
            break
    for e in reversed(pv):
        side = Player.CONSTRUCTOR if pos.owner[e] == OWNER_C else Player.BLOCKER
        pos.undo(e, side)
    return pv


def solve_plain(config: GameConfig) -> int:
    """Independent oracle: full-tree minimax, no memo, no pruning, no
    ordering. Exponential; n <= 5 in practice."""
    if config.constraint.kind is _c.ConstraintKind.NONE and config.target == "K3":
        return _solve_plain_unconstrained(config)
    n = config.n
    m = num_edges(n)
    ends = [edge_endpoints(n, e) for e in range(m)]
    cgraph = Graph(n, track_k4=config.target == "K4")
    cons = config.constraint
    free = list(range(m))
    c_first = config.first_player is Player.CONSTRUCTOR
    target = config.target

    def rec(c_turn: bool) -> int:
        if not free:
            return cgraph.score(target)
        if c_turn:
            best = -1
            for i in range(len(free)):
                e = free[i]
                u, v = ends[e]
                if not _c.is_legal(cons, cgraph, u, v):
                    continue
                free[i] = free[-1]
                free.pop()
                cgraph.add_edge(u, v)
                val = rec(False)
                cgraph.remove_edge(u, v)
                free.append(e)
                free[i], free[-1] = free[-1], free[i]
                if val > best:
                    best = val
            if best < 0:  # Constructor stuck: game over
                return cgraph.score(target)
            return best
        best = 1 << 30
        for i in range(len(free)):
            e = free[i]
            free[i] = free[-1]
            free.pop()
            val = rec(True)
            free.append(e)
            free[i], free[-1] = free[-1], free[i]
            if val < best:
                best = val
        return best

    return rec(c_first)


def _solve_plain_unconstrained(config: GameConfig) -> int:
    """Bare full-tree recursion on int bitsets (every free edge is legal)."""
    n = config.n
    m = num_edges(n)
    ends = [edge_endpoints(n, e) for e in range(m)]
    rows = [0] * n
    free = list(range(m))
    c_first = config.first_player is Player.CONSTRUCTOR

    def rec(count: int, c_turn: bool) -> int:
        if not free:
            return count
        best = -1 if c_turn else 1 << 30
        for i in range(len(free)):
            e = free[i]
            free[i] = free[-1]
            free.pop()
            u, v = ends[e]
            if c_turn:
                delta = (rows[u] & rows[v]).bit_count()
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                val = rec(count + delta, False)
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
                if val > best:
                    best = val
            else:
                val = rec(count, True)
                if val < best:
                    best = val
            free.append(e)
            free[i], free[-1] = free[-1], free[i]
        return best

    return rec(0, c_first)


def verify_strategy_optimality(config: GameConfig, strategy, side: Player) -> dict:
    """Play `strategy` against the solver-optimal opponent.

    Returns achieved score vs the exact value. The opponent re-solves
    after every move (tables persist within the call).
    """
    exact = solve_exact(config).value
    solver = _Solver(config, canonicalize=False)
    pos = solver.pos
    upper = num_edges(config.n) ** 3

    from .engine import GameState

    state = GameState(config)
    while not state.finished:
        mover = state.turn
        if mover is side:
            move = strategy.next_move(state)
        else:
            moves = pos.legal_constructor() if mover is Player.CONSTRUCTOR else pos.free_edges()
            move = None
            best_val = None
            for e in sorted(moves):
                pos.do(e, mover)
                val = solver.search(-1, upper)
                pos.undo(e, mover)
                better = (best_val is None
                          or (mover is Player.CONSTRUCTOR and val > best_val)
                          or (mover is Player.BLOCKER and val < best_val))
                if better:
                    best_val, move = val, e
        logged = len(state.move_log)
        state.apply_move(move)
        for rec in state.move_log[logged:]:
            strategy.observe(state, rec.player, rec.eid, rec.passed)
            pos.do(rec.eid, rec.player)
    achieved = state.score()
    return {"achieved": achieved, "exact": exact, "side": side.value}
