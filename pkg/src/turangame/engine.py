"""Game referee: three-valued edge ownership, turn order, legality, score.

Constructor and Blocker alternately claim edges of K_n. Constructor's
claims must keep her graph inside the configured constraint; Blocker
claims freely. The game ends when every edge is claimed or when
Constructor has no legal move at her turn.

A strategy that has finished its plan may return a pass. The referee
then substitutes the lowest-id legal edge (extra Constructor edges
never lower the score and cannot violate a monotone constraint), or
ends the game if none exists. `GameConfig.stop_on_pass` turns a pass
into an immediate stop instead; large planar boards use it because
proving that no legal edge remains would require a planarity test per
free edge.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from array import array

from . import constraints as _c
from .graphcore import Graph, crossing_any, edge_endpoints, edge_id, num_edges

FREE, OWNER_C, OWNER_B = 0, 1, 2

# Boards up to this size run the eager stuck-check after every move, so
# `finished` flips as soon as Constructor is out of legal moves even if
# nobody passes. Larger boards defer the check to the pass path.
EAGER_STUCK_LIMIT = 300


class Player(enum.Enum):
    CONSTRUCTOR = "C"
    BLOCKER = "B"

    @property
    def other(self) -> "Player":
        return Player.BLOCKER if self is Player.CONSTRUCTOR else Player.CONSTRUCTOR


class EngineError(Exception):
    pass


class OccupancyError(EngineError):
    """Move on an edge that is already claimed."""


class RuleViolation(EngineError):
    """Constructor move that breaks the configured constraint."""

    def __init__(self, constraint_name: str, edge: tuple[int, int]):
        self.constraint_name = constraint_name
        self.edge = edge
        super().__init__(f"edge {edge} would violate constraint {constraint_name}")


class ForfeitError(EngineError):
    """A strategy produced an illegal move; attributed, never repaired."""

    def __init__(self, strategy_id: str, reason: str):
        self.strategy_id = strategy_id
        super().__init__(f"strategy {strategy_id} forfeits: {reason}")


@dataclass(frozen=True)
class GameConfig:
    n: int
    target: str = "K3"
    constraint: _c.Constraint = _c.NONE
    first_player: Player = Player.CONSTRUCTOR
    seed: int = 0
    stop_on_pass: bool = False
    validation: str = "full"  # "full" | "fast" (planar: cheap checks + periodic audit)
    audit_every: int = 500

    def __post_init__(self):
        if self.n < 3:
            raise EngineError("games need n >= 3")
        if self.target not in ("K3", "K4"):
            raise EngineError(f"unknown target {self.target}")
        if self.validation not in ("full", "fast"):
            raise EngineError(f"unknown validation mode {self.validation}")


@dataclass
class MoveRecord:
    player: Player
    eid: int
    passed: bool = False  # Constructor passed; eid is the substituted edge


class GameState:
    """Mutable game position. One instance per game; not shared across tasks."""

    def __init__(self, config: GameConfig):
        self.config = config
        self.n = config.n
        self.m = num_edges(config.n)
        self.owner = bytearray(self.m)
        track_k4 = config.target == "K4"
        self.cgraph = Graph(config.n, track_k4=track_k4)
        self.bgraph = Graph(config.n)
        self.turn = config.first_player
        self.move_log: list[MoveRecord] = []
        self.finished = False
        self.free_count = self.m
        self.last_eid: Optional[int] = None
        self.last_mover: Optional[Player] = None
        self.last_c_eid: Optional[int] = None
        # Monotone scan state: every edge below _scan_ptr is claimed or
        # permanently illegal for Constructor (constraints only tighten).
        self._scan_ptr = 0
        self._illegal = bytearray(self.m)
        self._legal_hint: Optional[int] = None
        self._c_moves_since_audit = 0
        self._c_us = array("i")  # Constructor chords in claim order
        self._c_vs = array("i")

    # -- inspection ---------------------------------------------------------

    def edge(self, eid: int) -> tuple[int, int]:
        return edge_endpoints(self.n, eid)

    def eid(self, u: int, v: int) -> int:
        return edge_id(self.n, u, v)

    def score(self) -> int:
        return self.cgraph.score(self.config.target)

    def is_free(self, eid: int) -> bool:
        return self.owner[eid] == FREE

    def is_legal_for(self, player: Player, eid: int) -> bool:
        if self.owner[eid] != FREE:
            return False
        if player is Player.BLOCKER:
            return True
        u, v = self.edge(eid)
        return self._constructor_ok(u, v)

    def _constructor_ok(self, u: int, v: int) -> bool:
        cons = self.config.constraint
        if cons.kind is _c.ConstraintKind.EMBEDDED:
            # flat interleaving scan over the claim-ordered chord arrays;
            # identical to the constraints predicate, kernel-backed
            a, b = (u, v) if u < v else (v, u)
            return not crossing_any(self._c_us, self._c_vs, len(self._c_us), a, b)
        if self.config.validation == "fast" and cons.kind is _c.ConstraintKind.PLANAR:
            # Trusted mode: bound check plus cheap certificates; the full
            # static test runs periodically and at game end instead of on
            # every candidate edge.
            if self.n >= 3 and self.cgraph.edge_count + 1 > 3 * self.n - 6:
                return False
            return True
        return _c.is_legal(cons, self.cgraph, u, v)

    def legal_moves(self) -> list[int]:
        """Moves for the side to move, ordered by edge id."""
        if self.finished:
            return []
        if self.turn is Player.BLOCKER:
            return [e for e in range(self.m) if self.owner[e] == FREE]
        out = []
        for e in range(self.m):
            if self.owner[e] == FREE:
                u, v = self.edge(e)
                if self._constructor_ok(u, v):
                    out.append(e)
        return out

    # -- the monotone lowest-legal scan --------------------------------------

    def _lowest_legal(self) -> Optional[int]:
        """Lowest-id free edge Constructor may claim, or None.

        Amortized by the monotone pointer: claimed or illegal-forever
        edges are never revisited.
        """
        owner = self.owner
        illegal = self._illegal
        e = self._scan_ptr
        while e < self.m:
            if owner[e] == FREE and not illegal[e]:
                u, v = self.edge(e)
                if self._constructor_ok(u, v):
                    # everything below e is claimed or illegal-forever
                    self._scan_ptr = e
                    return e
                illegal[e] = 1
            e += 1
        self._scan_ptr = self.m
        return None

    def constructor_has_move(self) -> bool:
        hint = self._legal_hint
        if hint is not None and self.owner[hint] == FREE:
            u, v = self.edge(hint)
            if self._constructor_ok(u, v):
                return True
        self._legal_hint = self._lowest_legal()
        return self._legal_hint is not None

    # -- mutation -----------------------------------------------------------

    def apply_move(self, move: Optional[int]) -> "GameState":
        """Applies an edge claim, or a Constructor pass (move is None)."""
        if self.finished:
            raise EngineError("game already finished")
        mover = self.turn
        if move is None:
            if mover is not Player.CONSTRUCTOR:
                raise RuleViolation("pass", (-1, -1))
            if self.config.stop_on_pass:
                self.finished = True
                return self
            sub = self._lowest_legal()
            if sub is None:
                self.finished = True
                return self
            self._claim(mover, sub, passed=True)
            return self
        if not 0 <= move < self.m:
            raise EngineError(f"edge id {move} out of range")
        if self.owner[move] != FREE:
            raise OccupancyError(f"edge {self.edge(move)} already claimed")
        if mover is Player.CONSTRUCTOR:
            u, v = self.edge(move)
            if not self._constructor_ok(u, v):
                raise RuleViolation(self.config.constraint.name, (u, v))
        self._claim(mover, move, passed=False)
        return self

    def _claim(self, mover: Player, eid: int, passed: bool) -> None:
        u, v = self.edge(eid)
        if mover is Player.CONSTRUCTOR:
            self.owner[eid] = OWNER_C
            self.cgraph.add_edge(u, v)
            a, b = (u, v) if u < v else (v, u)
            self._c_us.append(a)
            self._c_vs.append(b)
            self.last_c_eid = eid
            self._maybe_audit()
        else:
            self.owner[eid] = OWNER_B
            self.bgraph.add_edge(u, v)
        self.free_count -= 1
        self.move_log.append(MoveRecord(mover, eid, passed))
        self.last_eid = eid
        self.last_mover = mover
        self.turn = mover.other
        if self.free_count == 0:
            self.finished = True
        elif self.turn is Player.CONSTRUCTOR and self._eager_check():
            if not self.constructor_has_move():
                self.finished = True

    def _eager_check(self) -> bool:
        cons = self.config.constraint
        if cons.kind is _c.ConstraintKind.NONE:
            return False  # free edges always legal
        if cons.kind is _c.ConstraintKind.PLANAR and self.n > EAGER_STUCK_LIMIT:
            return False
        return self.n <= EAGER_STUCK_LIMIT

    def _maybe_audit(self) -> None:
        """Fast-mode planarity audit: full static test every audit_every moves."""
        if self.config.validation != "fast":
            return
        if self.config.constraint.kind is not _c.ConstraintKind.PLANAR:
            return
        self._c_moves_since_audit += 1
        if self._c_moves_since_audit >= self.config.audit_every:
            self._c_moves_since_audit = 0
            if not _c.is_planar(self.cgraph):
                raise EngineError("planarity audit failed in fast validation mode")


@dataclass
class GameResult:
    config: GameConfig
    score: int
    moves: tuple[MoveRecord, ...]
    final_c: Graph
    final_b: Graph


def play_game(config: GameConfig, constructor, blocker) -> GameResult:
    """Runs a full game between two strategy objects.

    Strategies expose `next_move(state) -> Optional[int]` and
    `observe(state, mover, eid, passed)`. A strategy returning an
    illegal or occupied edge forfeits: that is a test failure signal,
    never silently repaired.
    """
    state = GameState(config)
    strategies = {Player.CONSTRUCTOR: constructor, Player.BLOCKER: blocker}
    while not state.finished:
        strat = strategies[state.turn]
        mover = state.turn
        move = strat.next_move(state)
        if move is None and mover is Player.BLOCKER and state.free_count > 0:
            raise ForfeitError(getattr(strat, "id", "?"), "Blocker may not pass")
        logged = len(state.move_log)
        try:
            state.apply_move(move)
        except (OccupancyError, RuleViolation) as exc:
            raise ForfeitError(getattr(strat, "id", "?"), str(exc)) from exc
        if len(state.move_log) > logged:
            rec = state.move_log[-1]
            constructor.observe(state, rec.player, rec.eid, rec.passed)
            blocker.observe(state, rec.player, rec.eid, rec.passed)
    if config.validation == "fast" and config.constraint.kind is _c.ConstraintKind.PLANAR:
        if not _c.is_planar(state.cgraph):
            raise EngineError("final planarity audit failed")
    return GameResult(
        config=config,
        score=state.score(),
        moves=tuple(state.move_log),
        final_c=state.cgraph,
        final_b=state.bgraph,
    )


# ---------------------------------------------------------------------------
# Transcripts
# ---------------------------------------------------------------------------

def write_transcript(result: GameResult) -> str:
    cfg = result.config
    lines = [
        f"game n={cfg.n} target={cfg.target} constraint={cfg.constraint.name} "
        f"first={cfg.first_player.value} seed={cfg.seed}"
    ]
    for rec in result.moves:
        u, v = edge_endpoints(cfg.n, rec.eid)
        if rec.passed:
            lines.append(f"C pass->{u} {v}")
        else:
            lines.append(f"{rec.player.value} {u} {v}")
    lines.append(f"score {result.score}")
    return "\n".join(lines) + "\n"


def parse_transcript(text: str) -> tuple[GameConfig, list[tuple[Player, int, int, bool]], int]:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].split()
    if head[0] != "game":
        raise EngineError("transcript must start with a game header")
    kv = dict(part.split("=", 1) for part in head[1:])
    config = GameConfig(
        n=int(kv["n"]),
        target=kv["target"],
        constraint=_c.parse_constraint(kv["constraint"]),
        first_player=Player(kv["first"]),
        seed=int(kv["seed"]),
    )
    moves = []
    trailer_score = None
    for ln in lines[1:]:
        if ln.startswith("score "):
            trailer_score = int(ln.split()[1])
            break
        tok = ln.split()
        if tok[0] == "C" and tok[1].startswith("pass->"):
            u = int(tok[1].split("->", 1)[1])
            v = int(tok[2])
            moves.append((Player.CONSTRUCTOR, u, v, True))
        else:
            moves.append((Player(tok[0]), int(tok[1]), int(tok[2]), False))
    if trailer_score is None:
        raise EngineError("transcript missing score trailer")
    return config, moves, trailer_score


def replay_transcript(text: str) -> GameResult:
    """Re-applies a transcript through full validation; raises on violation."""
    config, moves, trailer_score = parse_transcript(text)
    state = GameState(config)
    for player, u, v, passed in moves:
        if state.turn is not player:
            raise EngineError(f"transcript out of turn at {player.value} {u} {v}")
        state.apply_move(state.eid(u, v))
        if passed:
            state.move_log[-1].passed = True
    result = GameResult(
        config=config,
        score=state.score(),
        moves=tuple(state.move_log),
        final_c=state.cgraph,
        final_b=state.bgraph,
    )
    if result.score != trailer_score:
        raise EngineError(
            f"replay score {result.score} does not match trailer {trailer_score}"
        )
    return result
