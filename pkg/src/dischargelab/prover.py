"""The proof loop: generate the configuration words once, filter by the
forbidden library, solve, report tight configurations, ingest reduction
evidence, iterate, and export a self-contained proof bundle.

A session is a directory of text artifacts plus a manifest with content
hashes; saving is deterministic so that save/load/save round-trips byte for
byte.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction

from . import choose, fragments, lp, paperset, rules, words

KINDS = (words.VERTEX3, words.FACE3, words.FACE5)


class NotProven(RuntimeError):
    pass


class EvidenceReplayFailed(RuntimeError):
    pass


def _sha(text):
    return hashlib.sha256(text.encode()).hexdigest()


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


@dataclass
class Entry:
    """One forbidden-configuration entry of the session library."""

    id: str
    description: str = ""
    status: str = "Pending"       # HeuristicProved | PairProved | Asserted | Pending
    patterns: list = field(default_factory=list)   # pattern text lines
    fragment: str = ""                             # fragment file text
    pivot: str = ""
    pairs: list = field(default_factory=list)
    absorbs: list = field(default_factory=list)
    evidence: dict = field(default_factory=dict)
    assert_reason: str = ""
    actor: str = ""

    def to_json(self):
        return {k: getattr(self, k) for k in
                ("id", "description", "status", "patterns", "fragment", "pivot",
                 "pairs", "absorbs", "evidence", "assert_reason", "actor")}

    @staticmethod
    def from_json(d):
        d = dict(d)
        d["pairs"] = [tuple(p) for p in d.get("pairs", [])]
        return Entry(**d)


@dataclass
class RoundOutcome:
    kind: str                  # "success" | "tight"
    alpha: Fraction
    certificate: lp.Certificate
    tight: list
    exact: bool


class Session:
    """Prover state on disk.  One writer at a time; reads are cheap."""

    def __init__(self, path):
        self.path = path
        self.lock = threading.Lock()
        self.entries = []
        self.log = []
        self.certificate = None
        self.tight = []
        self.manifest = {"version": 1, "k": 12, "words": {}}
        self._words_cache = {}
        self._model_cache = None

    # -- persistence --------------------------------------------------

    def save(self):
        os.makedirs(self.path, exist_ok=True)
        with open(self._p("manifest.json"), "w") as f:
            f.write(_dump(self.manifest))
        with open(self._p("library.json"), "w") as f:
            f.write(_dump([e.to_json() for e in self.entries]))
        with open(self._p("log.jsonl"), "w") as f:
            for rec in self.log:
                f.write(json.dumps(rec, sort_keys=True) + "\n")
        if self.certificate is not None:
            with open(self._p("certificate.txt"), "w") as f:
                f.write(self.certificate.to_text())
        with open(self._p("tight.txt"), "w") as f:
            f.write("\n".join(self.tight) + ("\n" if self.tight else ""))

    @staticmethod
    def load(path):
        s = Session(path)
        with open(os.path.join(path, "manifest.json")) as f:
            s.manifest = json.load(f)
        lib = os.path.join(path, "library.json")
        if os.path.exists(lib):
            with open(lib) as f:
                s.entries = [Entry.from_json(d) for d in json.load(f)]
        logp = os.path.join(path, "log.jsonl")
        if os.path.exists(logp):
            with open(logp) as f:
                s.log = [json.loads(line) for line in f if line.strip()]
        cert = os.path.join(path, "certificate.txt")
        if os.path.exists(cert):
            with open(cert) as f:
                s.certificate = lp.Certificate.from_text(f.read())
        tight = os.path.join(path, "tight.txt")
        if os.path.exists(tight):
            with open(tight) as f:
                s.tight = [line.rstrip("\n") for line in f if line.strip()]
        return s

    def _p(self, name):
        return os.path.join(self.path, name)

    # -- generation ---------------------------------------------------

    def generate(self, parallel=False):
        """Generate and persist the full configuration-word sets."""
        os.makedirs(self.path, exist_ok=True)
        for kind in KINDS:
            ws = list(words.enumerate_words(kind))
            text = "\n".join(w.text for w in ws) + "\n" if ws else ""
            fname = f"words_{kind}.txt"
            with open(self._p(fname), "w") as f:
                f.write(text)
            self.manifest["words"][kind] = {"count": len(ws), "sha256": _sha(text)}
            self._words_cache[kind] = ws
        self.save()
        return {k: self.manifest["words"][k]["count"] for k in KINDS}

    def word_set(self, kind):
        if kind not in self._words_cache:
            fname = self._p(f"words_{kind}.txt")
            if not os.path.exists(fname):
                raise NotProven("session has no generated word sets; run gen first")
            with open(fname) as f:
                ws = [words.word_from_text(line) for line in f if line.strip()]
            meta = self.manifest["words"].get(kind, {})
            text = "\n".join(w.text for w in ws) + "\n" if ws else ""
            if meta and meta.get("sha256") != _sha(text):
                raise NotProven(f"word set {kind} does not match its manifest hash")
            self._words_cache[kind] = ws
        return self._words_cache[kind]

    # -- the loop -----------------------------------------------------

    def patterns(self):
        out = []
        for e in self.entries:
            for text in e.patterns:
                out.append(words.pattern_from_text(text, id=e.id))
        return out

    def build_model(self):
        sig = _sha("".join(sorted(t for e in self.entries for t in e.patterns)))
        if self._model_cache and self._model_cache[0] == sig:
            return self._model_cache[1]
        kept = []
        pats = self.patterns()
        for kind in KINDS:
            kept.extend(words.filter_forbidden(self.word_set(kind), pats))
        model = lp.build_model(kept)
        self._model_cache = (sig, model)
        return model

    def iterate(self, nonneg=False):
        """One solve round: Success with a verified certificate at 4, or the
        sorted tight configuration list."""
        model = self.build_model()
        alpha, cert, tight, exact = lp.solve_auto(model, alpha_target=Fraction(4),
                                                  nonneg=nonneg)
        if not lp.verify(model, cert):
            raise AssertionError("solver returned an unverifiable certificate")
        outcome = RoundOutcome("success" if alpha >= 4 else "tight",
                               alpha, cert, tight, exact)
        with self.lock:
            self.certificate = cert
            self.tight = tight
            self.log.append({
                "seq": len(self.log),
                "event": "iterate",
                "alpha": str(alpha),
                "certificate_sha256": _sha(cert.to_text()),
                "tight_count": len(tight),
                "library_size": len(self.entries),
                "exact_path": exact,
            })
            self.save()
        return outcome

    # -- reductions ---------------------------------------------------

    def attempt_reduce(self, fragment, pivot="", pairs=()):
        """Run the reduction machinery on a fragment; returns a replayable
        evidence blob on success, a diagnostic dict on failure.  Does not
        modify the library."""
        if isinstance(fragment, str):
            fragment = fragments.fragment_from_text(fragment)
        prob = fragments.build_reduction_problem(fragment, self.manifest.get("k", 12))
        pairs = [tuple(p) for p in (pairs or prob.pairs)]
        H = prob.graph
        base = {
            "fragment": fragment.to_text(),
            "k": prob.k,
            "graph": H.to_text(),
            "ell": {v: H.ell[v] for v in H.verts},
            "pivot": pivot,
            "pairs": [list(p) for p in pairs],
        }
        if choose.is_happy_graph(H):
            return dict(base, mode="happy", result=True)
        if choose.algorithm_a(H):
            return dict(base, mode="heuristic", result=True)
        if pivot and pairs and choose.reduce_with_identified_pair(H, pivot, pairs):
            return dict(base, mode="pair", result=True)
        diag = {"result": False, "reason": "heuristic and pair identification failed"}
        _, info = choose.algorithm_a_trace(H)
        if info is not None:
            core = info["core"]
            diag["core"] = sorted(core.verts)
            diag["core_ell"] = {v: core.ell[v] for v in core.verts}
            if pivot and pivot in core.adj:
                row = choose.compute_inclusion_row(core, pivot)
                diag["inclusion_row"] = {v: bool(row[v]) for v in core.verts}
        return dict(base, **diag)

    def replay_evidence(self, evidence):
        fresh = self.attempt_reduce(evidence["fragment"],
                                    pivot=evidence.get("pivot", ""),
                                    pairs=[tuple(p) for p in evidence.get("pairs", [])])
        for key in ("mode", "result", "ell", "graph"):
            if fresh.get(key) != evidence.get(key):
                return False
        return bool(fresh.get("result"))

    def commit_reduction(self, entry, actor="cli"):
        """Extend the forbidden library.  Evidence is replayed before the
        entry lands; asserted entries need an explicit justification."""
        if isinstance(entry, dict):
            entry = Entry.from_json(entry)
        for text in entry.patterns:
            words.pattern_from_text(text)
        if entry.status in ("HeuristicProved", "PairProved"):
            if not entry.evidence or not self.replay_evidence(entry.evidence):
                raise EvidenceReplayFailed(f"evidence for {entry.id} does not replay")
        elif entry.status == "Asserted":
            if not entry.assert_reason:
                raise EvidenceReplayFailed(f"asserted entry {entry.id} lacks a reason")
        entry.actor = actor
        with self.lock:
            self.entries.append(entry)
            self._model_cache = None
            self.log.append({
                "seq": len(self.log),
                "event": "commit",
                "entry": entry.id,
                "status": entry.status,
                "patterns": len(entry.patterns),
                "actor": actor,
            })
            self.save()
        return entry

    # -- export -------------------------------------------------------

    def absorption_report(self):
        tags = {}
        for e in self.entries:
            for t in e.absorbs:
                tags.setdefault(t, e.id)
        return rules.c6plus_absorption_check(tags)

    def export_proof(self, outdir):
        """Write the self-contained proof bundle; every obligation is
        re-checked here, independent of cached state."""
        model = self.build_model()
        cert = self.certificate
        if cert is None or cert.alpha < 4:
            raise NotProven("no certificate at alpha >= 4 in this session")
        if not lp.verify(model, cert):
            raise NotProven("stored certificate fails exact verification")
        pending = [e.id for e in self.entries if e.status == "Pending"]
        if pending:
            raise NotProven(f"library has pending entries: {pending}")
        for e in self.entries:
            if e.status in ("HeuristicProved", "PairProved"):
                if not self.replay_evidence(e.evidence):
                    raise NotProven(f"evidence replay failed for {e.id}")
        report = self.absorption_report()
        unabsorbed = [ctx.text for ctx, hit in report if hit is None]
        if unabsorbed:
            raise NotProven(f"{len(unabsorbed)} overloaded edge contexts unabsorbed")

        os.makedirs(outdir, exist_ok=True)
        files = {}
        files["model.txt"] = model.to_text()
        files["certificate.txt"] = cert.to_text()
        files["verify.txt"] = (
            f"alpha = {cert.alpha}\n"
            f"constraints = {model.n_constraints}\n"
            f"distinct rows = {len(model.rows)}\n"
            "exact substitution check: PASS\n")
        files["library.json"] = _dump([e.to_json() for e in self.entries])
        files["absorption.txt"] = "\n".join(
            f"{ctx.text}\ttransit={rules.edge_transit(ctx)}\t"
            + (f"absorbed-by={hit[1]} via {hit[0]}" if hit else "UNABSORBED")
            for ctx, hit in report) + "\n"
        files["asserted.txt"] = "\n".join(
            f"{e.id}\t{e.assert_reason}" for e in self.entries
            if e.status == "Asserted") + "\n"
        files["REPLAY.md"] = (
            "# Replaying this bundle\n\n"
            "1. Re-verify the certificate: load model.txt and certificate.txt\n"
            "   and run the exact substitution check (dischargelab.lp.verify).\n"
            "2. Replay every evidence blob in library.json through\n"
            "   Session.attempt_reduce and compare modes and list sizes.\n"
            "3. Re-run the overloaded-edge enumeration and confirm each context\n"
            "   in absorption.txt is absorbed by a committed entry.\n"
            "4. Asserted entries (asserted.txt) are manual obligations and the\n"
            "   only inputs taken on trust.\n")
        hashes = {}
        for name, content in files.items():
            with open(os.path.join(outdir, name), "w") as f:
                f.write(content)
            hashes[name] = _sha(content)
        with open(os.path.join(outdir, "bundle.json"), "w") as f:
            f.write(_dump({"files": hashes, "alpha": str(cert.alpha),
                           "entries": len(self.entries)}))
        return outdir


def load_paper_library(session, actor="fixture"):
    """Commit the shipped library of reducible structures into a session."""
    import importlib.resources as res

    committed = []
    for le in paperset.full_entries():
        status = {"heuristic": "HeuristicProved", "pair": "PairProved",
                  "assert": "Asserted"}[le.proof]
        frag_text = ""
        if le.fragment:
            ref = res.files("dischargelab").joinpath(f"fixtures/{le.fragment}.frag")
            frag_text = ref.read_text()
        entry = Entry(
            id=le.id, description=le.description, status=status,
            patterns=[p.text for p in le.patterns], fragment=frag_text,
            pivot=le.pivot, pairs=[tuple(p) for p in le.pairs],
            absorbs=list(le.absorbs), assert_reason=le.assert_reason)
        if status in ("HeuristicProved", "PairProved"):
            entry.evidence = session.attempt_reduce(frag_text, pivot=le.pivot,
                                                    pairs=le.pairs)
            if not entry.evidence.get("result"):
                raise EvidenceReplayFailed(f"fixture {le.id} failed its own reduction")
        committed.append(session.commit_reduction(entry, actor=actor))
    return committed
