"""HTTP session service exposing the referee to the browser UI.

JSON over HTTP. A session holds one live game between a human side and
a configured engine strategy. Responses always carry the full board
ownership, the score, the last move, and the finished flag; embedded
games additionally list the edges currently blocked for the human by
the crossing rule. Rejected requests leave the session untouched.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from . import constraints as _c
from .engine import (FREE, OWNER_B, OWNER_C, EngineError, GameConfig, GameState,
                     OccupancyError, Player, RuleViolation)
from .strategies import Strategy, StrategyConfigError, make_strategy


class CreateSession(BaseModel):
    n: int
    constraint: str = "none"
    target: str = "K3"
    human_side: str = "C"
    engine_strategy: str = "random"
    seed: int = 0


class MoveBody(BaseModel):
    u: int
    v: int


@dataclass
class Session:
    id: str
    state: GameState
    human_side: Player
    engine: Strategy
    engine_strategy: str
    created: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())
    updated: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())
    lock: threading.Lock = field(default_factory=threading.Lock)

    def touch(self) -> None:
        self.updated = datetime.now(timezone.utc).isoformat()


def _edges_of(state: GameState, owner_code: int) -> list[list[int]]:
    out = []
    for eid in range(state.m):
        if state.owner[eid] == owner_code:
            u, v = state.edge(eid)
            out.append([u, v])
    return out


def session_view(sess: Session) -> dict:
    state = sess.state
    last = None
    if state.move_log:
        rec = state.move_log[-1]
        u, v = state.edge(rec.eid)
        last = {"player": rec.player.value, "u": u, "v": v, "passed": rec.passed}
    view = {
        "id": sess.id,
        "n": state.n,
        "constraint": state.config.constraint.name,
        "target": state.config.target,
        "human_side": sess.human_side.value,
        "engine_strategy": sess.engine_strategy,
        "turn": state.turn.value,
        "finished": state.finished,
        "score": state.score(),
        "constructor": _edges_of(state, OWNER_C),
        "blocker": _edges_of(state, OWNER_B),
        "last_move": last,
        "created": sess.created,
        "updated": sess.updated,
    }
    if state.config.constraint.kind is _c.ConstraintKind.EMBEDDED:
        blocked = []
        for eid in range(state.m):
            if state.owner[eid] == FREE:
                u, v = state.edge(eid)
                partner = _c.crossing_partner(state.n, state.cgraph, u, v)
                if partner is not None:
                    blocked.append({"u": u, "v": v,
                                    "crosses": [partner[0], partner[1]]})
        view["crossing_blocked"] = blocked
    return view


def create_app() -> FastAPI:
    app = FastAPI(title="turangame session service")
    try:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(CORSMiddleware, allow_origins=["*"],
                           allow_methods=["*"], allow_headers=["*"])
    except ImportError:  # pragma: no cover
        pass
    sessions: dict[str, Session] = {}

    def get_session(session_id: str) -> Session:
        sess = sessions.get(session_id)
        if sess is None:
            raise HTTPException(status_code=404, detail={"code": "not-found"})
        return sess

    @app.post("/session")
    def create_session(body: CreateSession):
        try:
            config = GameConfig(
                n=body.n,
                target=body.target,
                constraint=_c.parse_constraint(body.constraint, n=body.n),
                seed=body.seed,
            )
            human = Player(body.human_side)
            engine = make_strategy(body.engine_strategy, human.other, config)
        except (EngineError, _c.ConstraintError, StrategyConfigError, ValueError) as exc:
            raise HTTPException(status_code=422, detail={"code": "bad-config",
                                                         "reason": str(exc)})
        sess = Session(
            id=uuid.uuid4().hex,
            state=GameState(config),
            human_side=human,
            engine=engine,
            engine_strategy=body.engine_strategy,
        )
        sessions[sess.id] = sess
        return session_view(sess)

    @app.get("/session/{session_id}")
    def get_state(session_id: str):
        return session_view(get_session(session_id))

    @app.get("/session/{session_id}/legal")
    def get_legal(session_id: str):
        sess = get_session(session_id)
        with sess.lock:
            state = sess.state
            moves = [[*state.edge(e)] for e in state.legal_moves()]
            return {"turn": state.turn.value, "moves": moves}

    @app.post("/session/{session_id}/move")
    def human_move(session_id: str, body: MoveBody):
        sess = get_session(session_id)
        with sess.lock:
            state = sess.state
            if state.finished:
                raise HTTPException(status_code=409, detail={"code": "finished"})
            if state.turn is not sess.human_side:
                raise HTTPException(status_code=409, detail={"code": "not-your-turn"})
            try:
                eid = state.eid(body.u, body.v)
            except Exception:
                raise HTTPException(status_code=422, detail={"code": "bad-edge"})
            detail = None
            if state.config.constraint.kind is _c.ConstraintKind.EMBEDDED \
                    and state.turn is Player.CONSTRUCTOR and state.owner[eid] == FREE:
                partner = _c.crossing_partner(state.n, state.cgraph, body.u, body.v)
                if partner is not None:
                    detail = {"code": "illegal",
                              "reason": state.config.constraint.name,
                              "crosses": [partner[0], partner[1]]}
            try:
                state.apply_move(eid)
            except OccupancyError:
                raise HTTPException(status_code=409, detail={"code": "occupied"})
            except RuleViolation as exc:
                raise HTTPException(status_code=409, detail=detail or {
                    "code": "illegal", "reason": exc.constraint_name})
            sess.engine.observe(state, state.move_log[-1].player,
                                state.move_log[-1].eid, False)
            sess.touch()
            return session_view(sess)

    @app.post("/session/{session_id}/engine-move")
    def engine_move(session_id: str):
        sess = get_session(session_id)
        with sess.lock:
            state = sess.state
            if state.finished:
                raise HTTPException(status_code=409, detail={"code": "finished"})
            if state.turn is sess.human_side:
                raise HTTPException(status_code=409, detail={"code": "not-engine-turn"})
            move = sess.engine.next_move(state)
            logged = len(state.move_log)
            try:
                state.apply_move(move)
            except EngineError as exc:
                raise HTTPException(status_code=500, detail={"code": "engine-error",
                                                             "reason": str(exc)})
            for rec in state.move_log[logged:]:
                sess.engine.observe(state, rec.player, rec.eid, rec.passed)
            sess.touch()
            return session_view(sess)

    @app.post("/session/{session_id}/resign")
    def resign(session_id: str):
        sess = get_session(session_id)
        with sess.lock:
            sess.state.finished = True
            sess.touch()
            return session_view(sess)

    return app


def serve(addr: str) -> None:
    import uvicorn

    host, _, port = addr.rpartition(":")
    uvicorn.run(create_app(), host=host or "127.0.0.1", port=int(port))
