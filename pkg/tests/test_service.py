import json

import pytest
from fastapi.testclient import TestClient

from arcflow.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app(), raise_server_exceptions=False) as c:
        yield c


QUARTER = {"arcs": [{"center": "1/8", "halfwidth": "1/8"}]}
HALF_SET = {"arcs": [{"center": "1/4", "halfwidth": "1/4"}]}


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok"}


def test_eval_pair_and_triple(client):
    resp = client.post("/eval", json={"a": QUARTER, "b": QUARTER})
    assert resp.status_code == 200
    body = resp.json()
    assert body["measures"] == {"a": "1/4", "b": "1/4"}
    assert body["kneser_defect"] == "0"

    resp = client.post("/eval", json={
        "a": QUARTER, "b": QUARTER, "c": QUARTER, "tau": "1/8", "eta": "1/4",
    })
    body = resp.json()
    assert body["defect"] == "1/64"
    assert body["triple"] == "0"
    assert body["tau_matching"] == "1/8"
    assert body["defect_truncated"] == "0"
    assert body["admissibility"]["admissible"] is True
    assert body["admissibility"]["eta_bounded"] is True


def test_eval_star(client):
    resp = client.post("/eval/star", json={"a": "1/2", "b": "1/2", "c": "1/2"})
    assert resp.json() == {"value": "3/16"}
    resp = client.post("/eval/star", json={"a": "1/4", "b": "1/4", "c": "1/4"})
    assert resp.json() == {"value": "3/64"}


def test_eval_parse_error(client):
    resp = client.post("/eval", json={
        "a": {"arcs": [{"center": "x", "halfwidth": "1/8"}]}, "b": QUARTER,
    })
    assert resp.status_code == 400
    assert resp.json()["error"] == "ParseError"


def test_eval_schema_error(client):
    resp = client.post("/eval", json={"a": QUARTER})
    assert resp.status_code == 422


def test_flow_points_and_monotone(client):
    resp = client.post("/flow", json={
        "a": QUARTER, "b": QUARTER, "c": QUARTER,
        "points": 10, "check_monotone": True,
    })
    assert resp.status_code == 200
    body = resp.json()
    assert body["monotone"] is True
    lines = body["csv"].strip().splitlines()
    assert lines[0].startswith("s,m1,m2,m3,T_norm,sum_norm,D_norm")
    assert len(lines) == 11


def test_flow_explicit_grid(client):
    resp = client.post("/flow", json={
        "a": QUARTER, "b": QUARTER, "c": QUARTER,
        "grid": ["1", "3/2", "2"],
    })
    rows = [line.split(",") for line in
            resp.json()["csv"].strip().splitlines()[1:]]
    assert [r[0] for r in rows] == ["1", "3/2", "2"]
    assert [r[4] for r in rows] == ["0", "1/128", "5/256"]


def test_flow_domain_error(client):
    resp = client.post("/flow", json={
        "a": QUARTER, "b": QUARTER, "c": QUARTER, "grid": ["1", "100"],
    })
    assert resp.status_code == 422
    assert resp.json()["error"] == "ScaleOutOfRange"


def test_certify_and_gate(client):
    resp = client.post("/certify", json={
        "a": QUARTER, "b": QUARTER, "c": QUARTER, "eta": "1", "n_max": 3,
    })
    assert resp.status_code == 200
    body = resp.json()
    assert body["defect"] == "1/64"
    assert body["extremal"] is False

    resp = client.post("/certify", json={
        "a": QUARTER, "b": QUARTER, "c": HALF_SET, "eta": "1", "n_max": 3,
    })
    assert resp.status_code == 422
    assert resp.json()["error"] == "EtaTooLarge"


def test_certify_sweep(client):
    resp = client.post("/certify/sweep", json={"exponents": [4, 5, 6]})
    body = resp.json()
    assert [row["delta"] for row in body["rows"]] == ["1/16", "1/32", "1/64"]
    assert [row["defect"] for row in body["rows"]] == ["1/64", "1/128", "1/512"]
    assert 1.5 <= body["slope"] <= 2.5


def test_oracle_agree(client):
    resp = client.post("/oracle/agree", json={
        "a": QUARTER, "b": QUARTER, "c": QUARTER, "n": 256,
    })
    body = resp.json()
    assert body["continuum"] == "1/64"
    gap_num, gap_den = (body["gap"].split("/") + ["1"])[:2]
    bound_num, bound_den = (body["bound"].split("/") + ["1"])[:2]
    assert int(gap_num) * int(bound_den) <= int(bound_num) * int(gap_den)


def test_oracle_search(client):
    resp = client.post("/oracle/search", json={
        "n": 8, "sizes": [2, 2, 4], "objective": "min_kneser", "seed": 0,
    })
    body = resp.json()
    assert body["value"] == "-1"
    assert len(body["sets"]) == 3
