import json
import os

import pytest
from fastapi.testclient import TestClient

from dischargelab import lp, prover, server, words
from dischargelab.words import F3, F4, F5, F6P, V3, VERTEX3

from conftest import load_fragment


@pytest.fixture()
def small_session(tmp_path):
    """A session whose word universe is just the 3-vertex words: the loop
    mechanics are identical and rounds take milliseconds."""
    s = prover.Session(str(tmp_path / "s"))
    os.makedirs(s.path, exist_ok=True)
    import hashlib
    ws = list(words.enumerate_words(VERTEX3))
    text = "\n".join(w.text for w in ws) + "\n"
    with open(s._p("words_V3.txt"), "w") as f:
        f.write(text)
    for kind in ("F3", "F5"):
        with open(s._p(f"words_{kind}.txt"), "w") as f:
            f.write("")
        s.manifest["words"][kind] = {"count": 0, "sha256":
                                     hashlib.sha256(b"").hexdigest()}
    s.manifest["words"]["V3"] = {"count": len(ws),
                                 "sha256": hashlib.sha256(text.encode()).hexdigest()}
    s.save()
    return s


def test_session_roundtrip_byte_identical(small_session):
    small_session.iterate()
    files = sorted(os.listdir(small_session.path))
    before = {f: open(os.path.join(small_session.path, f), "rb").read()
              for f in files if os.path.isfile(os.path.join(small_session.path, f))}
    loaded = prover.Session.load(small_session.path)
    loaded.save()
    after = {f: open(os.path.join(small_session.path, f), "rb").read()
             for f in before}
    assert before == after


def test_iterate_deterministic(small_session):
    out1 = small_session.iterate()
    out2 = small_session.iterate()
    assert out1.alpha == out2.alpha
    assert out1.certificate.to_text() == out2.certificate.to_text()
    assert out1.tight == out2.tight


def test_iterate_reports_tight_baseline(small_session):
    out = small_session.iterate()
    assert out.kind == "tight"
    assert out.alpha == 3
    assert "V3:[3/3/3]" in out.tight


def test_commit_requires_evidence_or_reason(small_session):
    entry = prover.Entry(id="x", status="HeuristicProved",
                         patterns=["V3:[{3}/*/*]"])
    with pytest.raises(prover.EvidenceReplayFailed):
        small_session.commit_reduction(entry)
    entry = prover.Entry(id="x", status="Asserted", patterns=["V3:[{3}/*/*]"])
    with pytest.raises(prover.EvidenceReplayFailed):
        small_session.commit_reduction(entry)


def test_commit_with_evidence_and_corruption(small_session):
    frag = load_fragment("config1").to_text()
    evidence = small_session.attempt_reduce(frag, pivot="a")
    assert evidence["result"] and evidence["mode"] == "happy"
    entry = prover.Entry(id="config1", status="HeuristicProved",
                         patterns=["V3:[{3}/*/*]"], fragment=frag,
                         evidence=evidence)
    small_session.commit_reduction(entry)
    assert len(small_session.entries) == 1

    bad = dict(evidence)
    bad["ell"] = {k: v + 1 for k, v in evidence["ell"].items()}
    entry2 = prover.Entry(id="bogus", status="HeuristicProved",
                          patterns=["V3:[{4}/{4}/*]"], fragment=frag,
                          evidence=bad)
    with pytest.raises(prover.EvidenceReplayFailed):
        small_session.commit_reduction(entry2)
    assert len(small_session.entries) == 1


def test_alpha_monotone_over_commits(small_session):
    """Five scripted rounds: committing patterns never lowers alpha."""
    frag = load_fragment("config1").to_text()
    frag3 = load_fragment("config3").to_text()
    history = [small_session.iterate().alpha]
    batches = [
        ("c1", ["V3:[{3}/*/*]"], frag),
        ("c3", ["V3:[{4}/{4}/*]"], frag3),
        ("a45", ["V3:[{4}/{5}/{5}]"], None),
        ("a455", ["V3:[{4}/{5}/{6p}]"], None),
        ("a555", ["V3:[{5}/{5}/{5}]"], None),
    ]
    for eid, pats, f in batches:
        if f is not None:
            evidence = small_session.attempt_reduce(f)
            entry = prover.Entry(id=eid, status="HeuristicProved",
                                 patterns=pats, fragment=f, evidence=evidence)
        else:
            entry = prover.Entry(id=eid, status="Asserted", patterns=pats,
                                 assert_reason="scripted test round")
        small_session.commit_reduction(entry)
        history.append(small_session.iterate().alpha)
    assert all(b >= a for a, b in zip(history, history[1:]))
    assert len(history) >= 6


def test_export_requires_success(small_session):
    small_session.iterate()
    with pytest.raises(prover.NotProven):
        small_session.export_proof(os.path.join(small_session.path, "b"))


def test_tight_reproducible_from_words_and_library(small_session):
    out1 = small_session.iterate()
    reloaded = prover.Session.load(small_session.path)
    out2 = reloaded.iterate()
    assert out1.tight == out2.tight


# ---------------------------------------------------------------------------
# HTTP API


@pytest.fixture()
def client(small_session):
    small_session.iterate()
    return TestClient(server.make_app(small_session)), small_session


def test_api_status_tight_history(client):
    api, session = client
    status = api.get("/api/status").json()
    assert status["library_size"] == 0
    assert status["last_alpha"] == "3"
    tight = api.get("/api/tight", params={"limit": 3}).json()
    assert tight["count"] >= 3 and len(tight["tight"]) == 3
    hist = api.get("/api/history").json()
    assert any(rec["event"] == "iterate" for rec in hist["log"])


def test_api_config_lookup(client):
    api, _ = client
    out = api.get("/api/config/V3:[3.3.3]").json()
    assert out["word"] == "V3:[3/3/3]"
    assert out["constraint"]["rhs"] == "3"
    assert out["tight"]
    assert api.get("/api/config/garbage").status_code == 400


def test_api_attempt_and_commit_roundtrip(client):
    api, session = client
    frag = load_fragment("config1").to_text()
    attempt = api.post("/api/attempt-reduce",
                       json={"fragment": frag, "pivot": "a"}).json()
    assert attempt["result"] and attempt["mode"] == "happy"
    commit = api.post("/api/commit", json={
        "id": "config1", "patterns": ["V3:[{3}/*/*]"],
        "fragment": frag, "evidence": attempt})
    assert commit.status_code == 200
    assert commit.json()["library_size"] == 1
    hist = api.get("/api/history").json()
    assert any(rec.get("event") == "commit" and rec.get("entry") == "config1"
               for rec in hist["log"])
    # corrupted evidence is rejected
    bad = dict(attempt)
    bad["mode"] = "pair"
    out = api.post("/api/commit", json={"id": "z", "patterns": [],
                                        "fragment": frag, "evidence": bad})
    assert out.status_code == 422


def test_api_fragments_listing(client):
    api, _ = client
    frags = api.get("/api/fragments").json()
    assert "c0" in frags["fixtures"]
    assert "fig8-d1" in frags["fixtures"]


def test_api_bundle_conflict_when_unproven(client):
    api, _ = client
    assert api.get("/api/bundle").status_code == 409
