import pytest
from fastapi.testclient import TestClient

from app.main import app

API = "/api/v1"


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as test_client:
        yield test_client


def test_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["docs"] == "/docs"


def test_health(client):
    response = client.get(f"{API}/health/")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_detailed_health(client):
    checks = client.get(f"{API}/health/detailed").json()["checks"]
    assert checks["relative"]["loop_parameter"] == "-2*g"
    assert checks["pointed"]["loop_parameter"] == "-2*g"


def test_simplify(client):
    response = client.post(f"{API}/taut/simplify", json={"expression": "D(1,2)*D(1,2)", "n": 2})
    assert response.status_code == 200
    body = response.json()
    assert body["text"] == "-D(1,2)*psi(1)"
    assert body["data"]["n"] == 2


def test_syntax_error_is_bad_request(client):
    response = client.post(f"{API}/taut/simplify", json={"expression": "psi(1) +", "n": 2})
    assert response.status_code == 400
    assert response.json()["detail"]["kind"] == "syntax"


def test_pointed_degree(client):
    response = client.post(
        f"{API}/taut/degree",
        json={"expression": "K(1)*K(2)", "n": 2, "flavor": "pointed", "genus": "3"}
    )
    assert response.status_code == 200
    assert response.json()["text"] == "16"


def test_vanish(client):
    response = client.get(f"{API}/weights/vanish", params={"g": 7, "i": 2, "l": 3})
    assert response.status_code == 200
    assert response.json()["data"] == {"r": 0, "vanishes": True, "pure": False}


def test_bbw(client):
    response = client.post(f"{API}/weights/bbw", json={"weight": "-5,1", "g": 2})
    assert response.status_code == 200
    assert response.json()["data"]["degree"] == 3


def test_refusal_is_unprocessable(client):
    response = client.get(f"{API}/weights/decompose-power", params={"n": 3, "g": 2})
    assert response.status_code == 422
    assert response.json()["detail"]["kind"] == "refusal"


def test_brauer_compose(client):
    response = client.post(
        f"{API}/brauer/compose",
        json={"second": "[(1,2),(1',2')]", "first": "[(1,2),(1',2')]", "genus": "2"}
    )
    assert response.status_code == 200
    body = response.json()
    assert body["data"]["loops"] == 1
    assert body["text"] == "(-4)*[(1,2),(1',2')]"


def test_symprod_decompose(client):
    response = client.post(f"{API}/symprod/decompose", json={"cycle": "{x,y} - {x,o} - {y,o} + {o,o}"})
    assert response.status_code == 200
    body = response.json()
    assert body["level"] == 2
    assert [row["in_kernel"] for row in body["data"]] == [True, True, True]


def test_symprod_verify(client):
    response = client.post(f"{API}/symprod/verify", json={"n": 3, "alphabet_size": 2, "removal": "distinct"})
    assert response.status_code == 200
    assert response.json()["data"]["counterexample"] == "{o,o}"


def test_unknown_witness(client):
    response = client.get(f"{API}/taut/witness/nonsense")
    assert response.status_code == 400
    assert response.json()["detail"]["kind"] == "usage"


def test_gs_minus_y_witness(client):
    response = client.get(f"{API}/taut/witness/gs-minus-y")
    assert response.status_code == 200
    shapes = {row["shape"] for row in response.json()["data"]}
    assert shapes <= {"diagonal_divisor", "divisor_divisor"}
    assert len(response.json()["data"]) == 15
