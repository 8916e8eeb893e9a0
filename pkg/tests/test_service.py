"""HTTP layer: request/response models, error mapping, content rendering.

Everything runs against the in-process app via the test client; the same
app object is what the CLI drives through its ASGI transport.
"""

import json
import math

import pytest
from fastapi.testclient import TestClient

from holoinv import __version__
from holoinv.service import create_app

E_PI = math.exp(-math.pi)
SQRT2M1 = math.sqrt(2.0) - 1.0


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


# ----------------------------------------------------------------- health


def test_health(client):
    resp = client.get("/api/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok", "version": __version__}


# ------------------------------------------------------------------- eval


def test_eval_punctured_disk(client):
    resp = client.post(
        "/api/eval", json={"domain": "punctured-disk", "point": repr(E_PI)}
    )
    assert resp.status_code == 200
    data = resp.json()
    s, e, m = data["squeezing"], data["fridman"], data["quotient"]
    assert s["exact"] and s["lower"] == pytest.approx(E_PI, abs=1e-15)
    assert e["lower"] == pytest.approx(SQRT2M1, abs=1e-12)
    assert e["upper"] == 1.0
    assert m["upper"] == pytest.approx(E_PI / SQRT2M1, abs=1e-12)
    assert data["warnings"] == []
    assert data["explain"] is None


def test_eval_polydisk_origin(client):
    resp = client.post("/api/eval", json={"domain": "polydisk:2", "point": "0,0"})
    data = resp.json()
    rho = 2.0 ** -0.5
    for key in ("squeezing", "fridman"):
        assert data[key]["exact"]
        assert data[key]["lower"] == pytest.approx(rho, abs=1e-15)
    assert data["quotient"]["exact"] and data["quotient"]["lower"] == 1.0
    kinds = [c["kind"] for c in data["quotient"]["certificates"]]
    assert "TheoremCitation" in kinds


def test_eval_explain(client):
    resp = client.post(
        "/api/eval", json={"domain": "disk", "point": "0.3", "explain": True}
    )
    text = resp.json()["explain"]
    assert text is not None
    assert "certificate" in text
    assert "ClosedForm" in text


def test_eval_collects_warnings(client):
    resp = client.post(
        "/api/eval", json={"domain": "ellipsoid:0.5,2", "point": "0.1,0.1"}
    )
    assert resp.status_code == 200
    data = resp.json()
    assert any("squeezing" in w for w in data["warnings"])
    assert any("Fridman" in w for w in data["warnings"])
    assert data["squeezing"]["lower"] is None
    assert data["squeezing"]["upper"] == 1.0


def test_eval_with_constants_table(client):
    resp = client.post(
        "/api/eval",
        json={
            "domain": "product(disk,slab)",
            "point": "0",
            "constants": "slab 0.3\n",
        },
    )
    assert resp.status_code == 200
    data = resp.json()
    expected = (1.0 + 0.3 ** -2.0) ** -0.5
    assert data["squeezing"]["lower"] == pytest.approx(expected, abs=1e-12)
    assert data["quotient"]["lower"] == 1.0


@pytest.mark.parametrize(
    "payload,error",
    [
        ({"domain": "nosuch", "point": "0"}, "parse"),
        ({"domain": "annulus:2", "point": "0.5"}, "parse"),
        ({"domain": "disk", "point": "zebra"}, "parse"),
        ({"domain": "punctured-disk", "point": "0"}, "domain"),
        ({"domain": "ball:2", "point": "0.9,0.9"}, "domain"),
        ({"domain": "disk", "point": "0.1", "constants": "disk 0.5"}, "domain"),
    ],
)
def test_eval_error_mapping(client, payload, error):
    resp = client.post("/api/eval", json=payload)
    assert resp.status_code == 400
    body = resp.json()
    assert body["error"] == error
    assert body["message"]


def test_eval_validates_the_envelope(client):
    resp = client.post("/api/eval", json={"domain": "disk"})  # point missing
    assert resp.status_code == 422


# ------------------------------------------------------------------ sweep


def test_sweep_csv(client):
    resp = client.post(
        "/api/sweep", json={"a_start": 1.0, "a_stop": 2.0, "step": 0.5}
    )
    assert resp.status_code == 200
    data = resp.json()
    assert data["media_type"] == "text/csv"
    lines = data["content"].strip().splitlines()
    assert lines[0] == "A,a,sExact,eLower,mUpper"
    assert len(lines) == 4
    assert len(data["rows"]) == 3
    assert data["rows"][0]["A"] == 1.0
    assert data["rows"][0]["m_upper"] == pytest.approx(0.50316651519, abs=1e-9)


def test_sweep_json_round_trips(client):
    resp = client.post(
        "/api/sweep",
        json={"a_start": 1.0, "a_stop": 2.0, "step": 0.5, "format": "json"},
    )
    data = resp.json()
    assert data["media_type"] == "application/json"
    parsed = json.loads(data["content"])
    assert [row["A"] for row in parsed["rows"]] == [1.0, 1.5, 2.0]
    # embedded content and typed rows carry the same numbers
    for embedded, typed in zip(parsed["rows"], data["rows"]):
        assert embedded["m_upper"] == typed["m_upper"]


def test_sweep_svg(client):
    resp = client.post(
        "/api/sweep",
        json={"a_start": 0.5, "a_stop": 5.0, "step": 0.5, "format": "svg"},
    )
    data = resp.json()
    assert data["media_type"] == "image/svg+xml"
    assert data["content"].startswith("<svg")
    assert "polyline" in data["content"]
    assert "mUpper" in data["content"]  # legend labels the series


def test_sweep_rejects_an_empty_grid(client):
    resp = client.post(
        "/api/sweep", json={"a_start": 2.0, "a_stop": 1.0, "step": 0.5}
    )
    assert resp.status_code == 400
    assert resp.json()["error"] == "domain"


def test_sweep_validates_jobs_bounds(client):
    resp = client.post(
        "/api/sweep", json={"a_start": 1.0, "a_stop": 2.0, "step": 0.5, "jobs": 0}
    )
    assert resp.status_code == 422
    resp = client.post(
        "/api/sweep", json={"a_start": 1.0, "a_stop": 2.0, "step": 0.5, "jobs": 128}
    )
    assert resp.status_code == 422


# -------------------------------------------------------------- stability


def test_stability_default_run(client):
    resp = client.post("/api/stability", json={"z0": "0.2"})
    assert resp.status_code == 200
    data = resp.json()
    assert data["rotation"] == 0.0
    assert data["s_limit"] == pytest.approx(0.2, abs=1e-15)
    assert data["s_converged"] is True
    assert data["e_stable"] is True
    assert len(data["s_trajectory"]) == 18
    assert data["s_trajectory"][0]["bound"] == pytest.approx(0.1 / 0.98, abs=1e-9)
    assert data["annulus"]["inner_radius"] == pytest.approx(0.1, abs=1e-15)
    assert data["annulus"]["conclusive"] is False
    # CSV: one header, then the s rows followed by the e rows
    lines = data["content"].strip().splitlines()
    assert lines[0] == "k,r,bound,certificateKind"
    assert len(lines) == 1 + 2 * 18
    assert lines[1].endswith("MapWitness")
    assert lines[-1].endswith("Monotonicity")


def test_stability_with_floor_stops_short(client):
    resp = client.post("/api/stability", json={"z0": "0.2", "floor": 0.1})
    data = resp.json()
    assert len(data["s_trajectory"]) == 1
    assert data["s_converged"] is False  # insufficient exhaustion
    assert data["e_stable"] is True


def test_stability_external_upper_bound(client):
    resp = client.post("/api/stability", json={"z0": "0.2", "s_upper": 0.5})
    data = resp.json()
    annulus = data["annulus"]
    assert annulus["m_upper"] == pytest.approx(0.8179442874923, abs=1e-9)
    assert annulus["conclusive"] is True
    assert "m <" in annulus["text"] or "quotient" in annulus["text"]


def test_stability_rotation_matches_the_real_axis_case(client):
    real = client.post("/api/stability", json={"z0": "0.2"}).json()
    rotated = client.post("/api/stability", json={"z0": "0.2i"}).json()
    assert rotated["rotation"] == pytest.approx(math.pi / 2.0, abs=1e-12)
    for a, b in zip(real["s_trajectory"], rotated["s_trajectory"]):
        assert b["bound"] == pytest.approx(a["bound"], abs=1e-12)
    # the rendered CSV carries no base-point column, so it is identical
    assert real["content"] == rotated["content"]


def test_stability_json_content_round_trips(client):
    resp = client.post("/api/stability", json={"z0": "0.2", "format": "json"})
    data = resp.json()
    parsed = json.loads(data["content"])
    assert parsed["s_converged"] is True
    assert parsed["rotation"] == 0.0
    assert [p["bound"] for p in parsed["s_trajectory"]] == [
        p["bound"] for p in data["s_trajectory"]
    ]


def test_stability_svg(client):
    resp = client.post("/api/stability", json={"z0": "0.2", "format": "svg"})
    data = resp.json()
    assert data["media_type"] == "image/svg+xml"
    assert data["content"].startswith("<svg")


@pytest.mark.parametrize(
    "payload,error",
    [
        ({"z0": "0.2,0.3"}, "parse"),  # two coordinates
        ({"z0": "1.5"}, "domain"),
        ({"z0": "0.2", "r1": 0.3}, "domain"),
        ({"z0": "0.2", "s_upper": 0.01}, "domain"),  # contradicts certified lower
    ],
)
def test_stability_error_mapping(client, payload, error):
    resp = client.post("/api/stability", json=payload)
    assert resp.status_code == 400
    assert resp.json()["error"] == error


def test_stability_report_text_matches_model(client):
    resp = client.post("/api/stability", json={"z0": "0.2"})
    annulus = resp.json()["annulus"]
    assert "annulus inner radius = 0.1" in annulus["text"]
    assert "verdict" in annulus["text"]
