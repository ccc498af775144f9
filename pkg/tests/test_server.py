"""Session protocol: round trips, legality surfacing, no mutation on reject."""

import hashlib

import pytest
from fastapi.testclient import TestClient

from turangame.server import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


def _state_hash(view: dict) -> str:
    key = repr((view["constructor"], view["blocker"], view["turn"],
                view["score"], view["finished"]))
    return hashlib.sha256(key.encode()).hexdigest()


def test_create_and_state_roundtrip(client):
    resp = client.post("/session", json={"n": 12, "constraint": "embedded",
                                         "human_side": "C",
                                         "engine_strategy": "b-ecb"})
    assert resp.status_code == 200
    view = resp.json()
    sid = view["id"]
    assert view["n"] == 12
    assert view["turn"] == "C"
    assert view["score"] == 0
    legal = client.get(f"/session/{sid}/legal").json()
    assert len(legal["moves"]) == 66  # C(12,2) free edges

    got = client.get(f"/session/{sid}").json()
    assert got == view


def test_alternating_play_with_engine(client):
    sid = client.post("/session", json={"n": 8, "engine_strategy": "greedy-block"}).json()["id"]
    for move_round in range(5):
        legal = client.get(f"/session/{sid}/legal").json()["moves"]
        u, v = legal[0]
        view = client.post(f"/session/{sid}/move", json={"u": u, "v": v}).json()
        assert view["last_move"]["player"] == "C"
        before_engine = len(view["blocker"])
        view = client.post(f"/session/{sid}/engine-move").json()
        assert len(view["blocker"]) == before_engine + 1  # exactly one new edge
    assert view["score"] == view_score_from_edges(view)


def view_score_from_edges(view: dict) -> int:
    from turangame.graphcore import Graph
    g = Graph(view["n"])
    for u, v in view["constructor"]:
        g.add_edge(u, v)
    return g.triangle_count


def test_illegal_embedded_move_names_crossing_partner(client):
    sid = client.post("/session", json={"n": 8, "constraint": "embedded",
                                        "engine_strategy": "random"}).json()["id"]
    view = client.post(f"/session/{sid}/move", json={"u": 0, "v": 4}).json()
    client.post(f"/session/{sid}/engine-move")
    before = client.get(f"/session/{sid}").json()
    resp = client.post(f"/session/{sid}/move", json={"u": 2, "v": 6})
    assert resp.status_code == 409
    detail = resp.json()["detail"]
    assert detail["code"] == "illegal"
    assert detail["reason"] == "embedded"
    assert detail["crosses"] == [0, 4]
    after = client.get(f"/session/{sid}").json()
    assert _state_hash(before) == _state_hash(after)  # rejected: unchanged


def test_crossing_blocked_listed_for_embedded(client):
    sid = client.post("/session", json={"n": 6, "constraint": "embedded",
                                        "engine_strategy": "random"}).json()["id"]
    view = client.post(f"/session/{sid}/move", json={"u": 0, "v": 3}).json()
    blocked = {(b["u"], b["v"]) for b in view["crossing_blocked"]}
    assert (1, 4) in blocked and (2, 5) in blocked and (1, 5) in blocked
    assert (4, 5) not in blocked


def test_occupied_and_turn_errors(client):
    sid = client.post("/session", json={"n": 6}).json()["id"]
    client.post(f"/session/{sid}/move", json={"u": 0, "v": 1})
    resp = client.post(f"/session/{sid}/move", json={"u": 0, "v": 1})
    assert resp.status_code == 409
    assert resp.json()["detail"]["code"] in ("occupied", "not-your-turn")
    resp = client.post("/session/doesnotexist/move", json={"u": 0, "v": 1})
    assert resp.status_code == 404


def test_engine_side_can_be_constructor(client):
    view = client.post("/session", json={"n": 10, "constraint": "star:4",
                                         "human_side": "B",
                                         "engine_strategy": "c-s4"}).json()
    sid = view["id"]
    view = client.post(f"/session/{sid}/engine-move").json()
    assert len(view["constructor"]) == 1
    legal = client.get(f"/session/{sid}/legal").json()
    assert legal["turn"] == "B"
    u, v = legal["moves"][0]
    view = client.post(f"/session/{sid}/move", json={"u": u, "v": v}).json()
    assert len(view["blocker"]) == 1


def test_resign_finishes(client):
    sid = client.post("/session", json={"n": 6}).json()["id"]
    view = client.post(f"/session/{sid}/resign").json()
    assert view["finished"]


def test_bad_config_rejected(client):
    resp = client.post("/session", json={"n": 6, "constraint": "wat"})
    assert resp.status_code == 422
    resp = client.post("/session", json={"n": 6, "engine_strategy": "c-p6"})
    assert resp.status_code == 422
