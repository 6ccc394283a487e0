import pytest
from fastapi.testclient import TestClient
from api.app import app
from core.config import settings

client = TestClient(app)


def test_health():
    assert client.get("/health").json() == {"status": "healthy"}


def test_decompose():
    response = client.get("/api/partitions/decompose", params={"t": 3, "partition": "5,5,2,2"})
    assert response.status_code == 200
    body = response.json()
    assert body["core"] == [2]
    assert body["quotient"] == [[2], [1], [1]]


def test_decompose_bad_partition():
    response = client.get("/api/partitions/decompose", params={"t": 3, "partition": "5,x"})
    assert response.status_code == 400


def test_classify():
    response = client.get("/api/partitions/classify",
                          params={"partition": "2,1", "spec": ["sc", "pz:1", "bgt:3"]})
    assert response.status_code == 200
    assert [m["member"] for m in response.json()["memberships"]] == [True, False, False]


def test_classify_unknown_class():
    response = client.get("/api/partitions/classify", params={"partition": "2,1", "spec": "weird"})
    assert response.status_code == 400


def test_enumerate_and_cores():
    body = client.get("/api/partitions/enumerate", params={"n": 4, "spec": "sc"}).json()
    assert body["partitions"] == [[2, 2]]
    body = client.get("/api/partitions/t-cores", params={"t": 2, "n_max": 6}).json()
    assert body["count"] == 4


def test_class_series():
    body = client.get("/api/series/class/sc", params={"order": 10}).json()
    assert body["coefficients"] == ["1", "1", "0", "1", "1", "1", "1", "1", "2", "2", "2"]


def test_rhs_series():
    response = client.post("/api/series/rhs/pz-gf", json={"z": 0, "order": 8})
    assert response.status_code == 200
    assert response.json()["coefficients"][-1] == "2"


def test_list_checks():
    checks = client.get("/api/verify/").json()
    assert "NO" in checks and "littlewood-scan" in checks


def test_verify():
    response = client.post("/api/verify/pz-gf", json={"z": 1, "order": 10})
    assert response.status_code == 200
    assert response.json()["verdict"] == "pass"


def test_verify_errors():
    assert client.post("/api/verify/no-such-check", json={}).status_code == 404
    assert client.post("/api/verify/bgt-gf", json={}).status_code == 400
    assert client.post("/api/verify/bgt-gf", json={"t": 0}).status_code == 422


@pytest.mark.parametrize("path, body", [
    ("/api/verify/pz-gf", {"z": 1, "order": settings.API_MAX_ORDER + 1}),
    ("/api/verify/congP", {"t": 2, "n_max": settings.API_MAX_N_MAX + 1}),
    ("/api/verify/bgt-gf", {"t": settings.API_MAX_T + 1}),
    ("/api/verify/z-gf-y", {"z": 0, "t": 3, "degree_cap": settings.API_MAX_DEGREE_CAP + 1}),
    ("/api/series/rhs/pz-gf", {"z": 0, "order": settings.API_MAX_ORDER + 1}),
])
def test_oversized_requests_rejected(path, body):
    assert client.post(path, json=body).status_code == 422


def test_oversized_queries_rejected():
    assert client.get("/api/series/class/sc", params={"order": settings.API_MAX_ORDER + 1}).status_code == 422
    assert client.get("/api/partitions/enumerate", params={"n": settings.API_MAX_WEIGHT + 1}).status_code == 422
    params = {"t": settings.API_MAX_T + 1, "n_max": 5}
    assert client.get("/api/partitions/t-cores", params=params).status_code == 422


def test_bounded_request_within_limits():
    response = client.post("/api/verify/congP", json={"t": 2, "n_max": 10})
    assert response.status_code == 200
    assert response.json()["params"] == {"t": 2, "n_max": 10}
