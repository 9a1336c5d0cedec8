import pytest
from fastapi.testclient import TestClient

from main import app

TREFOIL = "(O,o,0 | 1; (2,1),(3,1)); boundaries=1"


@pytest.fixture
def client():
    with TestClient(app) as c:
        yield c


def test_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert "message" in response.json()


def test_normalize(client):
    response = client.post("/words/normalize", json={"word": "a a b"})
    assert response.status_code == 200
    assert response.json()["normal_form"] == "b"


def test_conjugate(client):
    response = client.post("/words/conjugate", json={"word": "a b", "other": "b a"})
    assert response.json()["certificate"]["conjugator"] == "a"
    assert client.post("/words/conjugate", json={"word": "a b"}).status_code == 400


def test_abelian_image(client):
    response = client.post("/words/abelian-image", json={"word": "a b a b a b^2"})
    assert response.json()["data"]["abelian_image"] == {"a": 1, "b": 1}


def test_reversible(client):
    response = client.post("/torsion/reversible", json={"group": "pslz", "word": "a b a b^2"})
    assert response.status_code == 200
    body = response.json()
    assert body["verdict"] == "yes"
    assert body["certificate"]["kind"] == "reverser"


def test_gen_torsion(client):
    response = client.post("/torsion/gen-torsion", json={"word": "a b a b", "n": 3})
    assert response.json()["certificate"]["conjugators"] == ["1", "b^2", "b"]
    assert client.post("/torsion/gen-torsion", json={"word": "a b a b"}).status_code == 400


def test_classify_b3(client):
    response = client.post("/torsion/classify", json={"group": "b3", "word": "s1 s2 s1 s1 s2"})
    assert response.json()["verdict"] == "parabolic"
    response = client.post("/torsion/classify", json={"group": "b3", "word": "s1 s2"})
    assert response.json()["verdict"] == "elliptic-order-3"


def test_bad_word_is_400(client):
    response = client.post("/torsion/reversible", json={"word": "a q"})
    assert response.status_code == 400
    assert response.json()["detail"].startswith("unknown-generator")


def test_braids(client):
    response = client.post("/braids/normal-form", json={"word": "s1"})
    assert response.json()["normal_form"]["m"] == -1
    response = client.post("/braids/exponent-sum", json={"word": "s1 S2 h"})
    assert response.json()["exponent_sum"] == 6


def test_seifert(client):
    presentation = client.post("/seifert/presentation", json={"spec": TREFOIL}).json()
    assert presentation["data"]["generators"] == ["c1", "c2", "d1", "h"]
    quotient = client.post("/seifert/quotient", json={"spec": TREFOIL}).json()
    assert quotient["verdict"] == "supported"
    closed = client.post("/seifert/quotient", json={"spec": "(O,o,2 | 0); boundaries=0"}).json()
    assert closed["verdict"] == "unsupported"
    families = client.post("/seifert/families", json={"spec": TREFOIL}).json()
    assert len(families["data"]["families"]) == 1
    involutions = client.post("/seifert/involutions", json={"spec": TREFOIL}).json()
    assert involutions["data"]["involutions"] == ["c1"]


def test_seifert_reversible(client):
    response = client.post("/seifert/reversible", json={"spec": TREFOIL, "word": "c2"})
    assert response.json()["verdict"] == "no"


def test_certificate_round_trip(client):
    cert = client.post("/seifert/certificate", json={"spec": TREFOIL, "n": 3}).json()["certificate"]
    response = client.post("/certificates/verify", json={"certificate": cert})
    assert response.json()["verdict"] == "valid"


def test_sweeps(client):
    response = client.get("/sweeps/pslz-reversible", params={"max_syllables": 3})
    assert response.status_code == 200
    assert response.json()["data"]["mismatches"] == []
    assert client.get("/sweeps/free-groups").status_code == 404
