"""Pendant-leg gadget: exhaustive adversarial verification.

Blocker plays full-width (every free edge) at each of his turns while
the gadget runs; in every line Constructor must own a triangle with a
pendant leg within four of her moves, never exceeding degree three.
"""

from turangame.engine import FREE, GameConfig, GameState, Player
from turangame.graphcore import StructureKind, find_structure
from turangame.strategies.pendant import PendantLegPlan, pick_fresh_five


def _explore(state: GameState, plan: PendantLegPlan, c_moves: int, stats: dict):
    if plan.done:
        stats["lines"] += 1
        assert c_moves <= 4, "gadget exceeded four moves"
        tag = find_structure(state.cgraph, StructureKind.PENDANT_LEG_TRIANGLE)
        assert tag is not None, "no pendant-leg triangle at completion"
        assert state.cgraph.max_degree() <= 3
        return
    move = plan.next_move(state)
    branch_c = state.cgraph.copy()
    state.apply_move(move)
    if plan.done:
        _explore(state, plan, c_moves + 1, stats)
        _undo(state, move, branch_c)
        return
    # full-width Blocker reply
    free = [e for e in range(state.m) if state.owner[e] == FREE]
    for reply in free:
        import copy
        plan_snapshot = copy.deepcopy(plan)
        state.apply_move(reply)
        plan.on_blocker(state, *state.edge(reply))
        _explore(state, plan, c_moves + 1, stats)
        _undo_b(state, reply)
        _restore_plan(plan, plan_snapshot)
    _undo(state, move, branch_c)


def _undo(state: GameState, eid: int, _snapshot):
    u, v = state.edge(eid)
    state.owner[eid] = FREE
    state.cgraph.remove_edge(u, v)
    state.free_count += 1
    state.finished = False
    state.turn = Player.CONSTRUCTOR
    state.move_log.pop()


def _undo_b(state: GameState, eid: int):
    u, v = state.edge(eid)
    state.owner[eid] = FREE
    state.bgraph.remove_edge(u, v)
    state.free_count += 1
    state.finished = False
    state.turn = Player.BLOCKER
    state.move_log.pop()


def _restore_plan(plan: PendantLegPlan, snapshot: PendantLegPlan):
    plan.r = list(snapshot.r)
    plan.step = snapshot.step
    plan.branch = snapshot.branch
    plan.done = snapshot.done
    plan.triangle = snapshot.triangle
    plan.pendant = snapshot.pendant


def _run_exhaustive(n: int) -> int:
    state = GameState(GameConfig(n=n))
    verts = pick_fresh_five(state)
    plan = PendantLegPlan(verts)
    stats = {"lines": 0}
    _explore(state, plan, 0, stats)
    return stats["lines"]


def test_gadget_survives_full_width_blocker_n5():
    lines = _run_exhaustive(5)
    assert lines > 100


def test_gadget_survives_full_width_blocker_n6():
    lines = _run_exhaustive(6)
    assert lines > 1000
