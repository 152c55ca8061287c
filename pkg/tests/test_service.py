import pytest
from fastapi.testclient import TestClient

from bscells.service.app import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


SL3 = {"cartan": "A2", "u": [1, 2], "v": [1, 2], "eps": [-1, 1, -1, 1]}
SL4 = {
    "cartan": "A3",
    "u": [2, 3, 1, 3],
    "v": [3, 1, 2, 1],
    "eps": [-1, -1, 1, 1, -1, 1, -1, 1],
}


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_enumerate(client):
    resp = client.post("/enumerate", json=SL3)
    assert resp.status_code == 200
    body = resp.json()
    assert body["n"] == 4
    assert body["summary"]["total"] == 16
    # positive masks are counted by the lower interval of the monoid bound
    assert body["summary"]["positive"] == 6
    rec = next(r for r in body["records"] if r["mask"] == [0, 1, 0, 0])
    assert rec["J"] == [2] and rec["positive"] and rec["w"] == [1]
    assert rec["gammas"] == [[], [1], [1], [1]]


def test_enumerate_empty_words(client):
    resp = client.post("/enumerate", json={"cartan": "A1", "u": [], "v": [], "eps": []})
    assert resp.status_code == 200
    body = resp.json()
    assert body["summary"]["total"] == 1
    assert body["records"][0]["mask"] == []
    assert body["records"][0]["dim"] == 0


def test_enumerate_filters_and_fixed_w(client):
    resp = client.post("/enumerate", json={**SL3, "filter": "positive"})
    assert resp.status_code == 200
    assert all(r["positive"] for r in resp.json()["records"])
    resp = client.post("/enumerate", json={**SL3, "fixed_w": []})
    masks = [r["mask"] for r in resp.json()["records"]]
    assert [0, 0, 0, 0] in masks
    resp = client.post("/enumerate", json={**SL4, "max_bits": 3})
    assert resp.status_code == 400
    assert "bound" in resp.json()["detail"]


def test_enumerate_invalid_setup(client):
    resp = client.post("/enumerate", json={"cartan": "A2", "u": [1], "v": [2], "eps": [-1, -1]})
    assert resp.status_code == 400
    assert "eps" in resp.json()["detail"]
    resp = client.post("/enumerate", json={"cartan": "Q9", "u": [], "v": [], "eps": []})
    assert resp.status_code == 400
    resp = client.post("/enumerate", json={"cartan": "A2"})
    assert resp.status_code == 200  # empty words are a valid degenerate setup


def test_psi_endpoint_golden(client):
    resp = client.post("/psi", json={**SL4, "mask": [1, 0, 1, 0, 0, 0, 1, 0]})
    assert resp.status_code == 200
    body = resp.json()
    assert [item["psi"] for item in body["items"]] == [
        "z1",
        "z2",
        "z2*z3 - z1",
        "z4",
        "z4*z5 - z1",
        "z2*z5*z6 - z4*z5 - z2*z3 + z1",
        "z2*z6*z7 - z4*z7 - z6",
        "z4*z5*z8 - z4*z5*z7 - z1*z8 + z1*z7 - z5*z6 + z3",
    ]
    assert body["J"] == [1, 3, 7] and body["I"] == [1, 3, 7]
    item7 = body["items"][6]
    assert item7["L"] == "-z6" and item7["M"] == "z2*z6 - z4"


def test_psi_requires_distinguished(client):
    resp = client.post("/psi", json={**SL3, "mask": [1, 0, 0, 0]})
    assert resp.status_code == 400
    assert "distinguished" in resp.json()["detail"]


def test_sections_endpoint(client):
    resp = client.post("/sections", json={**SL3, "mask": [0, 1, 0, 0]})
    assert resp.status_code == 200
    body = resp.json()
    assert body["sections"][1]["q"] == [["0", "1", "0"], ["-1", "z2", "0"], ["0", "0", "1"]]


def test_mono_endpoint(client):
    resp = client.post("/mono", json={**SL4, "mask": [1, 0, 1, 0, 0, 0, 1, 0], "samples": 3})
    assert resp.status_code == 200
    body = resp.json()
    assert body["passed"] and body["verified_samples"] == 3
    assert body["index_set"] == [2, 4, 5, 6, 8]
    n = len(body["index_set"])
    for a in range(n):
        assert body["M"][a][a] == 1 and body["L"][a][a] == 1
    assert not body["closed_form"]["applicable"]  # plus-side word is nonempty
    resp = client.post("/mono", json={**SL3, "mask": [1, 0, 0, 0]})
    assert resp.status_code == 400  # not positive


def test_mono_closed_form_single_sided(client):
    req = {"cartan": "A2", "u": [1, 2, 1], "v": [], "eps": [-1, -1, -1], "mask": [0, 0, 0], "samples": 2}
    resp = client.post("/mono", json=req)
    assert resp.status_code == 200
    body = resp.json()
    assert body["closed_form"]["applicable"] and body["closed_form"]["matches"]
    assert body["passed"]


def test_convert_wy_endpoint(client):
    resp = client.post("/convert-wy", json={**SL3, "mask": [0, 0, 1, 1]})
    assert resp.status_code == 200
    body = resp.json()
    assert body["Jplus"] == [3] and body["Jminus"] == [4] and body["J0"] == [1, 2]
    # non-reduced words are rejected unless explicitly allowed
    resp = client.post("/convert-wy", json={**SL4, "mask": [0, 1, 1, 1, 1, 0, 0, 0]})
    assert resp.status_code == 400
    resp = client.post(
        "/convert-wy",
        json={**SL4, "mask": [0, 1, 1, 1, 1, 0, 0, 0], "allow_unreduced": True},
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["Jplus"] == [2, 4] and body["Jminus"] == [3, 5]
    assert body["J0"] == [1, 6, 7, 8]


def test_verify_endpoint_examples(client):
    resp = client.post("/verify", json={"suite": "examples"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["passed"]
    names = [c["name"] for c in body["checks"]]
    assert names == [
        "minor-functions-golden",
        "forced-zero-sets",
        "positivity-flags",
        "chart-sections-golden",
        "cell-characterizations",
    ]


def test_degenerate_empty_setup_endpoints(client):
    empty = {"cartan": "A1", "u": [], "v": [], "eps": [], "mask": []}
    resp = client.post("/psi", json=empty)
    assert resp.status_code == 200 and resp.json()["items"] == []
    resp = client.post("/mono", json={**empty, "samples": 0})
    assert resp.status_code == 200
    body = resp.json()
    assert body["passed"] and body["index_set"] == []
    resp = client.post("/convert-wy", json=empty)
    assert resp.status_code == 200


def test_validation_errors(client):
    resp = client.post("/psi", json={**SL3})  # missing mask
    assert resp.status_code == 422
    resp = client.post("/enumerate", json={**SL3, "filter": "bogus"})
    assert resp.status_code == 422
