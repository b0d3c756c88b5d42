"""HTTP service tests; the service must byte-match the CLI on shared inputs."""

import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from interlace.service import app

HERE = Path(__file__).parent


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


@pytest.fixture(scope="module")
def c4(client):
    r = client.post(
        "/api/collection/construct",
        json={"n": 8, "l": 3, "k": 4, "slice": "standard"},
    )
    assert r.status_code == 200
    return r.json()


class TestEndpoints:
    def test_standard_slice(self, client):
        r = client.get("/api/slice/standard", params={"n": 8, "l": 3})
        assert r.status_code == 200
        assert r.json()["members"] == [
            [1, 3, 5], [1, 3, 6], [1, 3, 7], [1, 4, 6], [1, 4, 7], [1, 5, 7],
        ]

    def test_construct(self, c4):
        assert len(c4["members"]) == 9

    def test_mutate_success(self, client, c4):
        r = client.post(
            "/api/mutate",
            json={"collection": c4, "element": [1, 3, 5, 6], "direction": "+"},
        )
        assert r.status_code == 200
        doc = r.json()
        assert doc["ok"] is True
        assert len(doc["result"]["members"]) == 9
        assert [2, 4, 6, 7] in doc["result"]["members"]

    def test_mutate_illegal_is_422(self, client, c4):
        r = client.post(
            "/api/mutate",
            json={"collection": c4, "element": [1, 2, 4, 6], "direction": "+"},
        )
        assert r.status_code == 422
        assert r.json()["error"] == "intertwining-pair"

    def test_validate_reports_pair(self, client):
        r = client.post(
            "/api/collection/validate",
            json={"n": 8, "k": 4, "l": 3, "members": [[1, 3, 5, 6], [2, 4, 6, 7]]},
        )
        assert r.status_code == 200
        assert r.json() == {"ok": False, "pair": [[1, 3, 5, 6], [2, 4, 6, 7]]}

    def test_is_mutable(self, client, c4):
        r = client.post(
            "/api/collection/is-mutable",
            json={"collection": c4, "element": [1, 3, 5, 6]},
        )
        assert r.status_code == 200
        assert r.json()["plus"] is True

    def test_mutation_path(self, client, client_t1_slice=None):
        t1 = {"n": 8, "k": 3, "l": 3,
              "members": [[1, 3, 5], [1, 3, 6], [1, 3, 7], [1, 4, 6], [1, 4, 7], [1, 5, 7]]}
        r = client.post(
            "/api/mutation-path",
            json={"collection": t1, "element": [1, 3, 5], "k": 4},
        )
        assert r.status_code == 200
        doc = r.json()
        assert doc["steps"] == [{"element": [1, 3, 5, 6], "direction": "+"}]
        assert [2, 4, 6, 7] in doc["result"]["members"]

    def test_gamma_quiver(self, client):
        r = client.get("/api/quiver/gamma", params={"n": 8, "k": 4, "l": 3})
        assert r.status_code == 200
        wraps = [a for a in r.json()["arrows"] if a["tag"] == "wrap"]
        assert wraps == [{"from": [1, 4, 6, 7], "to": [1, 2, 4, 6], "tag": "wrap"}]

    def test_strip_document(self, client):
        r = client.get("/api/quiver/strip", params={"n": 8, "k": 4, "l": 3})
        assert r.status_code == 200
        doc = r.json()
        assert len(doc["strip"]) == 15
        projectives = [o for o in doc["strip"] if o["projective"]]
        assert len(projectives) == 9
        for o in doc["strip"]:
            assert set(o) == {"pair", "iota", "projective"}

    def test_apr_mutate(self, client):
        r = client.post("/api/quiver/apr-mutate", json={"n": 8, "k": 4, "l": 3})
        assert r.status_code == 200
        assert [2, 4, 6, 7] in r.json()["vertices"]

    def test_slice_check(self, client):
        t2 = {"n": 8, "k": 3, "l": 3,
              "members": [[1, 3, 5], [1, 3, 6], [1, 3, 7], [3, 5, 7], [1, 4, 7], [1, 5, 7]]}
        r = client.post("/api/slice/check", json=t2)
        assert r.status_code == 200
        doc = r.json()
        assert doc["slice"] is False
        assert [[1, 3, 5], [3, 5, 7]] in doc["collisions"]["1"]
        t1 = {"n": 8, "k": 3, "l": 3,
              "members": [[1, 3, 5], [1, 3, 6], [1, 3, 7], [1, 4, 6], [1, 4, 7], [1, 5, 7]]}
        r = client.post("/api/slice/check", json=t1)
        assert r.json()["certificate"]["base_point"] == 1

    def test_auslander_quiver(self, client):
        r = client.get("/api/quiver/a", params={"m": 4, "d": 2})
        assert r.status_code == 200
        assert len(r.json()["vertices"]) == 10

    def test_enum_guard_is_422(self, client):
        r = client.get("/api/enum/maximal", params={"n": 12, "l": 3})
        assert r.status_code == 422
        assert r.json()["error"] == "guard-exceeded"

    def test_malformed_json_is_400(self, client):
        r = client.post(
            "/api/mutate",
            content=b"{not json",
            headers={"content-type": "application/json"},
        )
        assert r.status_code == 400
        assert r.json()["error"] == "malformed-json"

    def test_missing_field_is_422(self, client, c4):
        r = client.post("/api/mutate", json={"collection": c4})
        assert r.status_code == 422


class TestCliHttpParity:
    def test_construct_matches_cli_golden(self, client):
        golden = (HERE / "golden" / "construct_8_3_4.json").read_text()
        r = client.post(
            "/api/collection/construct",
            json={"n": 8, "l": 3, "k": 4, "slice": "standard"},
        )
        assert r.text == golden

    def test_mutate_matches_cli_golden(self, client):
        golden = json.loads((HERE / "golden" / "mutate_1356.json").read_text())
        c4 = json.loads((HERE / "fixtures" / "c4_t1.json").read_text())
        r = client.post(
            "/api/mutate",
            json={"collection": c4, "element": [1, 3, 5, 6], "direction": "+"},
        )
        assert r.json() == golden

    def test_gamma_matches_cli_golden(self, client):
        golden = (HERE / "golden" / "quiver_gamma_8_4_3.json").read_text()
        r = client.get("/api/quiver/gamma", params={"n": 8, "k": 4, "l": 3})
        assert r.text == golden

    def test_strip_matches_cli_golden(self, client):
        golden = (HERE / "golden" / "quiver_strip_8_4_3.json").read_text()
        r = client.get("/api/quiver/strip", params={"n": 8, "k": 4, "l": 3})
        assert r.text == golden

    def test_apr_matches_cli_golden(self, client):
        golden = (HERE / "golden" / "quiver_apr_8_4_3.json").read_text()
        r = client.post("/api/quiver/apr-mutate", json={"n": 8, "k": 4, "l": 3})
        assert r.text == golden
