import pytest
from fastapi.testclient import TestClient

from spinloc.fixedpoints import fixed_point_data, cp_standard_action, parse_fixed_point_data
from spinloc.service.app import create_app

import json


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_health(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok"}


class TestWeightsEndpoint:
    def test_standard_cp2(self, client):
        response = client.post("/weights", json={"n": 2})
        assert response.status_code == 200
        assert response.json() == {
            "half_dim": 2,
            "points": [
                {"label": "p_0", "sign": 1, "weights": [1, 2], "weight_sum": 3},
                {"label": "p_1", "sign": -1, "weights": [1, 1], "weight_sum": 2},
                {"label": "p_2", "sign": 1, "weights": [1, 2], "weight_sum": 3},
            ],
        }

    def test_exponents_source(self, client):
        response = client.post("/weights", json={"exponents": [5, 1, 3]})
        assert response.status_code == 200
        assert [p["sign"] for p in response.json()["points"]] == [1, 1, -1]

    def test_inline_data_source(self, client):
        payload = {
            "data": {
                "half_dim": 1,
                "points": [
                    {"label": "a", "sign": 1, "weights": [2]},
                    {"label": "b", "sign": -1, "weights": [3]},
                ],
            }
        }
        response = client.post("/weights", json=payload)
        assert response.status_code == 200
        assert response.json()["points"][1]["weight_sum"] == 3

    def test_response_parses_as_document(self, client):
        body = client.post("/weights", json={"n": 3}).json()
        parsed = parse_fixed_point_data(json.dumps(body))
        assert parsed == fixed_point_data(cp_standard_action(3))

    def test_no_source_rejected(self, client):
        response = client.post("/weights", json={})
        assert response.status_code == 422

    def test_two_sources_rejected(self, client):
        response = client.post("/weights", json={"n": 2, "exponents": [0, 1]})
        assert response.status_code == 422

    def test_duplicate_exponents_rejected(self, client):
        response = client.post("/weights", json={"exponents": [1, 1]})
        assert response.status_code == 422
        assert "distinct" in response.json()["detail"]

    def test_inconsistent_inline_data_rejected(self, client):
        payload = {
            "data": {"half_dim": 2, "points": [{"label": "a", "sign": 1, "weights": [1]}]}
        }
        response = client.post("/weights", json=payload)
        assert response.status_code == 422
        assert "expected 2" in response.json()["detail"]

    def test_nonpositive_weight_rejected(self, client):
        payload = {
            "data": {"half_dim": 1, "points": [{"label": "a", "sign": 1, "weights": [0]}]}
        }
        response = client.post("/weights", json=payload)
        assert response.status_code == 422


class TestSeriesEndpoint:
    def test_cp2_frozen(self, client):
        response = client.post("/series", json={"n": 2, "order": 12})
        body = response.json()
        assert body["order"] == 12
        assert body["coefficients"] == [
            "0", "0", "-1", "2", "-2", "2", "-3", "4", "-4", "4", "-5", "6", "-6",
        ]
        assert body["is_zero"] is False
        assert body["lowest_term"] == {"exponent": 2, "coefficient": "-1"}
        assert "t^(k/2)" in body["variable_note"]

    def test_cp3_zero(self, client):
        body = client.post("/series", json={"n": 3, "order": 60}).json()
        assert body["is_zero"] is True
        assert body["lowest_term"] is None
        assert set(body["coefficients"]) == {"0"}
        assert len(body["coefficients"]) == 61

    def test_default_order(self, client):
        body = client.post("/series", json={"n": 2}).json()
        assert body["order"] == 7

    def test_negative_order_rejected(self, client):
        response = client.post("/series", json={"n": 2, "order": -1})
        assert response.status_code == 422


class TestCheckEndpoint:
    def test_cp4(self, client):
        body = client.post("/check", json={"n": 4}).json()
        assert body["verdict"] == "NOT_SPIN"
        assert body["witness"] == "p_2"
        assert body["min_sum_plus"] == 6
        assert body["min_sum_minus"] == 7
        assert body["detail"]

    def test_cp3(self, client):
        body = client.post("/check", json={"n": 3}).json()
        assert body["verdict"] == "INCONCLUSIVE"
        assert body["witness"] is None


class TestCrossValidateEndpoint:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_consistent_on_standard_actions(self, client, n):
        body = client.post("/cross-validate", json={"n": n}).json()
        assert body["consistent"] is True
        assert body["n"] == n

    def test_explicit_order(self, client):
        body = client.post("/cross-validate", json={"n": 3, "order": 60}).json()
        assert body["order"] == 60
        assert body["series_is_zero"] is True
        assert body["verdict"] == "INCONCLUSIVE"

    def test_invalid_n_rejected(self, client):
        response = client.post("/cross-validate", json={"n": 0})
        assert response.status_code == 422
