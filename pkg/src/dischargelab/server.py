"""HTTP API over a prover session, consumed by the dashboard.

Payloads embed the session's text formats in JSON envelopes.  Mutations are
serialized through the session lock; reads never block on solves.
"""

from __future__ import annotations

import importlib.resources as res
import os
import urllib.parse

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from . import lp, prover, rules, words


class AttemptRequest(BaseModel):
    fragment: str
    pivot: str = ""
    pairs: list = []


class CommitRequest(BaseModel):
    id: str
    patterns: list = []
    description: str = ""
    fragment: str = ""
    pivot: str = ""
    pairs: list = []
    absorbs: list = []
    evidence: dict | None = None
    assert_reason: str = ""


def fixture_fragments():
    out = {}
    base = res.files("dischargelab").joinpath("fixtures")
    for entry in sorted(base.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".frag"):
            out[entry.name[:-5]] = entry.read_text()
    return out


def make_app(session):
    app = FastAPI(title="dischargelab", version="0.1.0")

    @app.get("/api/status")
    def status():
        rounds = [r for r in session.log if r.get("event") == "iterate"]
        return {
            "session": os.path.abspath(session.path),
            "words": session.manifest.get("words", {}),
            "library_size": len(session.entries),
            "pending": [e.id for e in session.entries if e.status == "Pending"],
            "asserted": [e.id for e in session.entries if e.status == "Asserted"],
            "alpha_history": [{"seq": r["seq"], "alpha": r["alpha"],
                               "tight_count": r["tight_count"],
                               "library_size": r["library_size"]} for r in rounds],
            "last_alpha": rounds[-1]["alpha"] if rounds else None,
        }

    @app.get("/api/tight")
    def tight(limit: int = 0):
        rows = session.tight[:limit] if limit else session.tight
        return {"count": len(session.tight), "tight": rows}

    @app.get("/api/config/{word_id}")
    def config(word_id: str):
        # ids use dots for slot separators; slashes do not survive routing
        text = urllib.parse.unquote(word_id).replace(".", "/")
        try:
            w = words.word_from_text(text)
        except Exception as exc:
            raise HTTPException(400, f"bad word: {exc}")
        coeffs, rhs, prov = lp.constraint_for_word(w)
        return {
            "word": w.text,
            "kind": w.kind,
            "slots": [words.SLOT_NAMES[v] for v in w.slots],
            "constraint": {
                "terms": [{"key": rules.key_text(lp.VAR_KEYS[j]), "coefficient": c}
                          for j, c in coeffs],
                "rhs": str(rhs),
            },
            "tight": prov in session.tight,
        }

    @app.get("/api/fragments")
    def frags():
        shipped = fixture_fragments()
        committed = {e.id: e.fragment for e in session.entries if e.fragment}
        return {"fixtures": shipped, "library": committed}

    @app.post("/api/attempt-reduce")
    def attempt(req: AttemptRequest):
        try:
            result = session.attempt_reduce(req.fragment, pivot=req.pivot,
                                            pairs=[tuple(p) for p in req.pairs])
        except Exception as exc:
            raise HTTPException(400, str(exc))
        return result

    @app.post("/api/commit")
    def commit(req: CommitRequest):
        entry = prover.Entry(
            id=req.id, description=req.description, patterns=req.patterns,
            fragment=req.fragment, pivot=req.pivot,
            pairs=[tuple(p) for p in req.pairs], absorbs=req.absorbs,
            evidence=req.evidence or {}, assert_reason=req.assert_reason)
        if req.assert_reason:
            entry.status = "Asserted"
        elif req.evidence:
            entry.status = "PairProved" if req.evidence.get("mode") == "pair" \
                else "HeuristicProved"
        try:
            session.commit_reduction(entry, actor="api")
        except prover.EvidenceReplayFailed as exc:
            raise HTTPException(422, str(exc))
        return {"committed": entry.id, "status": entry.status,
                "library_size": len(session.entries)}

    @app.get("/api/history")
    def history():
        return {"log": session.log}

    @app.get("/api/bundle")
    def bundle():
        try:
            out = session.export_proof(os.path.join(session.path, "bundle"))
        except prover.NotProven as exc:
            raise HTTPException(409, str(exc))
        import json
        with open(os.path.join(out, "bundle.json")) as f:
            manifest = json.load(f)
        return {"path": os.path.abspath(out), "manifest": manifest}

    return app
