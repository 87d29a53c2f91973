"""HTTP service: payload parity with the report layer and error mapping."""

import pytest
from fastapi.testclient import TestClient

from bookgenus.reports import (run_braid_info, run_dbc, run_pants, run_plumb,
                               run_snf, to_json)
from bookgenus.service.app import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_pants_matches_reports(client):
    response = client.post("/pants", json={"exponents": "2,-2,0"})
    assert response.status_code == 200
    assert response.json() == run_pants("2,-2,0")


def test_pants_bytes_match_cli_serialisation(client):
    response = client.post("/pants", json={"exponents": "2,3,5"})
    assert response.content.decode() == to_json(run_pants("2,3,5"))


def test_lens_without_q_omits_key(client):
    response = client.post("/pants", json={"exponents": "1,1,1"})
    payload = response.json()
    assert payload["class"] == {"type": "lens", "p": 3}


def test_dbc_variants(client):
    response = client.post("/dbc", json={"word": "1 2 1 2"})
    assert response.status_code == 200
    assert response.json() == run_dbc("1 2 1 2")

    response = client.post("/dbc", json={"word": "1 2 3"})
    assert response.status_code == 200
    payload = response.json()
    assert "class" not in payload
    assert payload == run_dbc("1 2 3")

    response = client.post("/dbc", json={"word": "", "strands": 1})
    assert response.json() == run_dbc("", strands=1)

    response = client.post("/dbc", json={"word": "1 2 1 2", "classify": False})
    assert response.json() == run_dbc("1 2 1 2", classify=False)


def test_plumb_and_snf_and_braid_info(client):
    assert client.post("/plumb", json={"pages": "annulus,annulus"}).json() == \
        run_plumb("annulus,annulus")
    assert client.post("/snf", json={"matrix": "[[-6,2],[-3,0]]"}).json() == \
        run_snf("[[-6,2],[-3,0]]")
    assert client.post("/braid-info", json={"word": "1 1 -2"}).json() == \
        run_braid_info("1 1 -2")


def test_parse_error_400(client):
    response = client.post("/pants", json={"exponents": "2,x,0"})
    assert response.status_code == 400
    payload = response.json()
    assert payload["error"] == "parse"
    assert "detail" in payload


def test_domain_error_422(client):
    response = client.post("/dbc", json={"word": "1 2 3 4", "classify": True})
    assert response.status_code == 422
    payload = response.json()
    assert payload["error"] == "domain"


def test_malformed_request_rejected(client):
    response = client.post("/pants", json={"wrong_field": 1})
    assert response.status_code == 422
