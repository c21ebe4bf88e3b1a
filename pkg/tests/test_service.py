import pytest
from fastapi.testclient import TestClient

from paritysg.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


class TestRnaEndpoint:
    def test_bnb(self, client):
        resp = client.post("/rna", json={"graph6": "C~", "method": "bnb"})
        assert resp.status_code == 200
        body = resp.json()
        assert body["value"] == 4
        assert body["n"] == 4 and body["m"] == 6
        assert body["witness"].startswith("v1=")

    def test_default_method(self, client):
        assert client.post("/rna", json={"graph6": "Bg"}).json()["value"] == 1

    def test_descent(self, client):
        resp = client.post("/rna", json={"graph6": "C~", "method": "descent"})
        assert resp.json()["method"] == "descent"

    def test_bad_graph6(self, client):
        resp = client.post("/rna", json={"graph6": "\x1f"})
        assert resp.status_code == 422

    def test_bad_method(self, client):
        resp = client.post("/rna", json={"graph6": "C~", "method": "magic"})
        assert resp.status_code == 422


class TestSpectrumEndpoint:
    def test_k4(self, client):
        resp = client.post("/spectrum", json={"graph6": "C~"})
        assert resp.json()["values"] == [4]

    def test_join(self, client):
        resp = client.post("/gen", json={"family": "join_p2_independent",
                                         "n": 5})
        g6 = resp.json()["graph6"]
        assert client.post("/spectrum", json={"graph6": g6}).json()[
            "values"
        ] == [4, 6]

    def test_disconnected_rejected(self, client):
        # Two isolated vertices: "A?" is K2-bar.
        resp = client.post("/spectrum", json={"graph6": "A?"})
        assert resp.status_code == 422


class TestClassifyGen:
    def test_classify(self, client):
        resp = client.post("/classify", json={"graph6": "C~"})
        assert resp.json()["family"] == "complete"

    def test_gen(self, client):
        resp = client.post("/gen", json={"family": "star", "n": 4})
        body = resp.json()
        assert body["graph6"] == "Cs"
        assert body["edges"] == [[0, 1], [0, 2], [0, 3]]

    def test_gen_below_minimum(self, client):
        resp = client.post("/gen", json={"family": "cycle", "n": 2})
        assert resp.status_code == 422

    def test_gen_unknown_family(self, client):
        resp = client.post("/gen", json={"family": "torus", "n": 5})
        assert resp.status_code == 422


class TestVerifyEndpoint:
    def test_explicit_graphs(self, client):
        resp = client.post(
            "/verify",
            json={"graphs": ["C~", "Bw"], "checks": ["conjecture2",
                                                     "trivial_bound"]},
        )
        body = resp.json()
        assert body["all_passed"]
        assert {r["check"] for r in body["reports"]} == {
            "conjecture2", "trivial_bound",
        }
        assert all(r["graphs_tested"] == 2 for r in body["reports"])

    def test_enumerate(self, client):
        resp = client.post("/verify", json={"enumerate_n": 4,
                                            "checks": ["all"]})
        body = resp.json()
        assert body["all_passed"]
        assert body["reports"][0]["graphs_tested"] == 1 + 1 + 4 + 38

    def test_requires_one_source(self, client):
        resp = client.post("/verify", json={"checks": ["all"]})
        assert resp.status_code == 422

    def test_unknown_check(self, client):
        resp = client.post("/verify", json={"graphs": ["C~"],
                                            "checks": ["bogus"]})
        assert resp.status_code == 422
