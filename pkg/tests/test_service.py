import json
import math

import pytest
from fastapi.testclient import TestClient

from spexsurf import (build_path, complete_graph, k2_join, load_certificate,
                      planar_k2_path_scheme, to_graph6, trace_faces)
from spexsurf.service import app, build_app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"
    assert body["schema_version"] == 1


def test_build_app_is_a_fresh_instance():
    assert build_app() is not app


def test_construct(client):
    body = client.post("/construct", json={"n": 20, "gamma": 2}).json()
    assert body["schema_version"] == 1
    assert body["edge_count"] == 60
    assert body["graph6"] is not None
    assert body["witness"]["dominating_pair"] == [0, 1]


def test_construct_error_envelope(client):
    resp = client.post("/construct", json={"n": 5, "gamma": 1})
    assert resp.status_code == 422
    err = resp.json()["error"]
    assert err["code"] == "precondition"
    assert "minimum" in err["message"]


def test_rho_graph6_and_family(client):
    body = client.post("/rho", json={"graph6": "D~{"}).json()
    assert body["rho"] == pytest.approx(4.0, abs=1e-9)
    assert body["n"] == 5 and body["edge_count"] == 10
    body = client.post("/rho", json={"n": 50, "gamma": 1,
                                     "perron_summary": True}).json()
    assert body["perron_max"] == pytest.approx(1.0, abs=1e-12)
    assert 0 < body["perron_min"] < 1
    resp = client.post("/rho", json={"graph6": "D~{", "n": 10})
    assert resp.status_code == 422
    resp = client.post("/rho", json={})
    assert resp.status_code == 422


def test_scale_refusal_code(client):
    resp = client.post("/search", json={"n": 40, "gamma": 1})
    assert resp.status_code == 422
    assert resp.json()["error"]["code"] == "scale"


def test_nonconvergence_code(client):
    resp = client.post("/rho", json={"graph6": to_graph6(build_path(7)),
                                     "tol": 1e-30})
    assert resp.status_code == 422
    assert resp.json()["error"]["code"] == "nonconvergence"


def test_bounds_rows(client):
    body = client.post("/bounds", json={"n": [100, 1000],
                                        "gamma": [0, 1]}).json()
    rows = body["rows"]
    assert len(rows) == 4
    assert [r["gamma"] for r in rows] == [0, 0, 1, 1]
    first = rows[0]
    assert first["lower"] == pytest.approx(first["rho0"] - 1 / 100, abs=1e-12)
    assert first["rho"] < first["ellingham_zha"]
    for r in rows:
        assert r["upper"] - r["lower"] == pytest.approx(0.05 / r["n"],
                                                        abs=1e-12)
    # fixed gamma: rho grows with n
    assert rows[1]["rho"] > rows[0]["rho"]
    assert rows[3]["rho"] > rows[2]["rho"]


def test_walks_exact_strings(client):
    body = client.post("/walks", json={"graph6": "D~{", "lmax": 3}).json()
    assert body["counts"] == ["20", "80", "320"]
    assert body["mode"] == "exact"


def test_zhang(client):
    body = client.post("/zhang", json={
        "parts": [{"n": 3}, {"n": 7}], "tol": 1e-12}).json()
    assert body["rho"] == pytest.approx(math.sqrt(21), abs=1e-10)
    assert body["order"] == 10


def test_compare(client):
    g1 = to_graph6(complete_graph(5))
    g2 = to_graph6(build_path(5))
    body = client.post("/compare", json={"g1": g1, "g2": g2}).json()
    assert body["sign"] == 1
    assert body["rho_order_matches"] is True
    body = client.post("/compare", json={"g1": g1, "g2": g1,
                                         "with_rho": False}).json()
    assert body["equal"] is True
    assert body["rho_joined_1"] is None


def test_genus(client):
    body = client.post("/genus", json={"graph6": "D~{"}).json()
    assert body["genus"] == 1
    assert body["exhaustive"] is True
    assert body["scheme"]["n"] == 5


def test_verify_embedding(client):
    body = client.post("/verify-embedding",
                       json={"certificate": "k7-torus"}).json()
    assert (body["f"], body["genus"], body["orientable"]) == (14, 2, True)
    scheme = load_certificate("k6-projective").to_json()
    body = client.post("/verify-embedding",
                       json={"scheme": scheme,
                             "dominating_pair": [0, 1]}).json()
    assert body["triangulation"]["avoiding_faces"] == 2
    resp = client.post("/verify-embedding", json={})
    assert resp.status_code == 422
    bad = json.loads(json.dumps(scheme))
    bad["rotation"][3] = bad["rotation"][3][:-1]
    resp = client.post("/verify-embedding", json={"scheme": bad})
    assert resp.status_code == 422
    assert "vertex 3" in resp.json()["error"]["message"]


def test_splice(client):
    host = load_certificate("k6-projective")
    face = next(w for w in trace_faces(host).faces if 0 in w and 1 in w)
    patch = planar_k2_path_scheme(3)
    body = client.post("/splice", json={
        "host": host.to_json(), "inner": patch.to_json(),
        "face": list(face), "outer": [0, 1, 2]}).json()
    assert body["genus"] == 1
    assert body["f"] == 10 + 6 - 2
    assert body["scheme"]["n"] == 8


def test_search(client):
    body = client.post("/search", json={"n": 14, "gamma": 1,
                                        "keep_top": 5}).json()
    assert body["candidates"] == 12765
    assert body["winner_rank"] == 20
    assert len(body["rows"]) == 6  # top five plus the winner
    assert body["rows"][0]["rank"] == 1


def test_w3max(client):
    degrees = [4, 4, 3, 3] + [2] * 4 + [1, 1]
    body = client.post("/w3max", json={"degrees": degrees}).json()
    assert body["value"] == 8 * 12 + 106
    assert body["shape_target"] == body["value"]


def test_report(client):
    body = client.post("/report", json={"n": [20], "gamma": [1]}).json()
    row = body["rows"][0]
    assert row["edge_count"] == 57
    assert row["witness_ok"] is True
    assert row["w2"] == "1050"
    assert row["genus_floor"] == 1


def test_validation_errors_are_422(client):
    resp = client.post("/construct", json={"n": "twenty", "gamma": 1})
    assert resp.status_code == 422
