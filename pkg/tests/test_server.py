"""HTTP API: endpoints, envelopes, error handling, CLI payload parity."""

import json
import threading

import pytest
from fastapi.testclient import TestClient

from latticestates.cli import canonical_dumps
from latticestates.classify import census, classify, write_census_json
from latticestates.fixtures import FIXTURES
from latticestates.server import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app(census_path="/nonexistent/census.json"))


class TestHealth:
    def test_healthz(self, client):
        response = client.get("/healthz")
        assert response.status_code == 200
        assert response.text == "ok"

    def test_cors_headers(self, client):
        response = client.get("/healthz", headers={"Origin": "http://localhost:5173"})
        assert response.headers.get("access-control-allow-origin") == "*"


class TestClassifyEndpoint:
    def test_unparseable_pattern_is_400(self, client):
        response = client.post("/classify", json={"pattern": "not-a-pattern"})
        assert response.status_code == 400

    def test_classify_by_hex(self, client):
        response = client.post("/classify", json={"pattern": FIXTURES["eq23"].hex()})
        assert response.status_code == 200
        body = response.json()
        assert body["result"]["verdict"] == "SEPARABLE"
        assert body["result"]["certificate"]["type"] == "covering"
        assert body["version"] == "1"
        assert "timing_ms" in body

    def test_classify_by_grid_and_mask_agree(self, client):
        grid = FIXTURES["eq15"].render()
        by_grid = client.post("/classify", json={"pattern": grid}).json()
        by_mask = client.post("/classify", json={"pattern": FIXTURES["eq15"].mask}).json()
        assert by_grid["result"] == by_mask["result"]
        assert by_grid["result"]["verdict"] == "PPT_ENTANGLED"

    def test_payload_matches_cli_bytes(self, client):
        response = client.post("/classify", json={"pattern": FIXTURES["eq14b"].hex()})
        api_payload = canonical_dumps(response.json()["result"])
        cli_payload = canonical_dumps(classify(FIXTURES["eq14b"]).as_json())
        assert api_payload == cli_payload

    def test_empty_mask_is_400(self, client):
        response = client.post("/classify", json={"pattern": "0x0000"})
        assert response.status_code == 400
        assert "error" in response.json()

    def test_malformed_body_is_400(self, client):
        response = client.post("/classify", content=b"{not json",
                               headers={"content-type": "application/json"})
        assert response.status_code == 400

    def test_missing_pattern_field_is_400(self, client):
        response = client.post("/classify", json={"mask": "0xFFFF"})
        assert response.status_code == 400

    def test_concurrent_requests(self, client):
        results = {}

        def hit(name):
            response = client.post("/classify",
                                   json={"pattern": FIXTURES[name].hex()})
            results[name] = response.json()["result"]["verdict"]

        threads = [threading.Thread(target=hit, args=(n,))
                   for n in ("eq13a", "eq14a", "eq23", "rank11")]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert results == {"eq13a": "NPT_ENTANGLED", "eq14a": "PPT_ENTANGLED",
                           "eq23": "SEPARABLE", "rank11": "SEPARABLE"}


class TestQuadruplesEndpoint:
    def test_all(self, client):
        response = client.get("/quadruples")
        assert response.status_code == 200
        assert len(response.json()["result"]) == 60

    def test_through_point(self, client):
        response = client.get("/quadruples", params={"point": "0,0"})
        body = response.json()["result"]
        assert len(body) == 15
        assert all([0, 0] in q["points"] for q in body)

    def test_bad_point(self, client):
        assert client.get("/quadruples", params={"point": "4,0"}).status_code == 400


class TestWitnessEndpoint:
    def test_phiv(self, client):
        response = client.post("/witness", json={
            "pattern": FIXTURES["eq15"].hex(), "family": "phiv",
            "params": {"v12_sq": 1.0}})
        assert response.status_code == 200
        assert abs(response.json()["result"]["mean_value"] + 0.05) < 1e-12

    def test_gamma(self, client):
        response = client.post("/witness", json={
            "pattern": FIXTURES["eq14a"].hex(), "family": "gamma",
            "params": {"t": 0.01}})
        assert response.json()["result"]["margin"] > 0

    def test_unknown_family(self, client):
        response = client.post("/witness", json={
            "pattern": "0xFFFF", "family": "nope"})
        assert response.status_code == 400

    def test_payload_matches_cli_bytes(self, client, capsys):
        from latticestates.cli import main
        response = client.post("/witness", json={
            "pattern": FIXTURES["eq15"].hex(), "family": "phiv",
            "params": {"v12_sq": 0.75}})
        api_payload = canonical_dumps(response.json()["result"])
        assert main(["witness", FIXTURES["eq15"].hex(), "--family", "phiv",
                     "--v12-sq", "0.75"]) == 0
        cli_payload = capsys.readouterr().out.strip()
        assert api_payload == cli_payload


class TestCensusSummary:
    def test_missing_file_404(self, client):
        assert client.get("/census/summary").status_code == 404

    def test_cached_file_served(self, tmp_path):
        path = tmp_path / "census.json"
        write_census_json(census(orbits_only=True, spectral=False), str(path))
        app_client = TestClient(create_app(census_path=str(path)))
        response = app_client.get("/census/summary")
        assert response.status_code == 200
        body = response.json()["result"]
        assert sum(body["totals"].values()) == 65535
        assert "orbits" not in body
