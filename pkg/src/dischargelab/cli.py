"""Command-line interface for the prover sessions."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import fragments, prover


def _session(args, must_exist=True):
    path = args.session
    if must_exist and not os.path.exists(os.path.join(path, "manifest.json")):
        print(f"no session at {path}; run `gen` first", file=sys.stderr)
        raise SystemExit(2)
    if os.path.exists(os.path.join(path, "manifest.json")):
        return prover.Session.load(path)
    return prover.Session(path)


def cmd_gen(args):
    s = _session(args, must_exist=False)
    counts = s.generate()
    for kind, n in counts.items():
        print(f"{kind}: {n} canonical words")


def cmd_solve(args):
    s = _session(args)
    out = s.iterate(nonneg=args.nonneg)
    print(f"outcome: {out.kind}")
    print(f"alpha* = {out.alpha}")
    print(f"tight constraints: {len(out.tight)}")
    if out.kind == "success":
        print("certificate verified exactly; ready for export")


def cmd_tight(args):
    s = _session(args)
    rows = s.tight[: args.limit] if args.limit else s.tight
    for t in rows:
        print(t)
    if args.limit and len(s.tight) > args.limit:
        print(f"... {len(s.tight) - args.limit} more")


def cmd_reduce(args):
    s = _session(args)
    with open(args.fragment) as f:
        text = f.read()
    pairs = [tuple(p.split(",")) for p in args.pair or []]
    result = s.attempt_reduce(text, pivot=args.pivot or "", pairs=pairs)
    print(json.dumps(result, indent=2, sort_keys=True))
    raise SystemExit(0 if result.get("result") else 1)


def cmd_commit(args):
    s = _session(args)
    with open(args.patterns) as f:
        pattern_lines = [line.strip() for line in f if line.strip()
                         and not line.startswith("#")]
    entry = prover.Entry(id=args.id, patterns=pattern_lines)
    if args.assert_reason:
        entry.status = "Asserted"
        entry.assert_reason = args.assert_reason
    elif args.evidence:
        with open(args.evidence) as f:
            entry.evidence = json.load(f)
        entry.fragment = entry.evidence.get("fragment", "")
        entry.pivot = entry.evidence.get("pivot", "")
        entry.pairs = [tuple(p) for p in entry.evidence.get("pairs", [])]
        entry.status = "PairProved" if entry.evidence.get("mode") == "pair" \
            else "HeuristicProved"
    else:
        print("commit needs --evidence or --assert", file=sys.stderr)
        raise SystemExit(2)
    s.commit_reduction(entry, actor="cli")
    print(f"committed {entry.id} ({entry.status}); library size {len(s.entries)}")


def cmd_load_paper(args):
    s = _session(args)
    entries = prover.load_paper_library(s)
    print(f"committed {len(entries)} library entries")


def cmd_export(args):
    s = _session(args)
    out = s.export_proof(args.out or os.path.join(args.session, "bundle"))
    print(f"bundle written to {out}")


def cmd_status(args):
    s = _session(args)
    print(f"session: {args.session}")
    for kind, meta in s.manifest.get("words", {}).items():
        print(f"  {kind}: {meta['count']} words  sha256 {meta['sha256'][:12]}")
    print(f"  library entries: {len(s.entries)}")
    by_status = {}
    for e in s.entries:
        by_status[e.status] = by_status.get(e.status, 0) + 1
    for st, n in sorted(by_status.items()):
        print(f"    {st}: {n}")
    rounds = [r for r in s.log if r.get("event") == "iterate"]
    for r in rounds[-5:]:
        print(f"  round {r['seq']}: alpha={r['alpha']} tight={r['tight_count']}"
              f" library={r['library_size']}")


def cmd_serve(args):
    from . import server
    import uvicorn

    s = _session(args)
    app = server.make_app(s)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")


def main(argv=None):
    ap = argparse.ArgumentParser(prog="dischargelab",
                                 description="LP-driven discharging proof search")
    ap.add_argument("--session", default="session", help="session directory")
    sub = ap.add_subparsers(dest="cmd", required=True)

    sub.add_parser("gen", help="generate the configuration word sets")

    p = sub.add_parser("solve", help="run one solve round")
    p.add_argument("--nonneg", action="store_true",
                   help="restrict rule charges to be nonnegative")

    p = sub.add_parser("tight", help="print the last tight configurations")
    p.add_argument("--limit", type=int, default=0)

    p = sub.add_parser("reduce", help="attempt to reduce a fragment")
    p.add_argument("fragment")
    p.add_argument("--pair", action="append",
                   help="identified distant pair a,b (repeatable)")
    p.add_argument("--pivot", help="pivot vertex for pair identification")

    p = sub.add_parser("commit", help="commit a forbidden configuration")
    p.add_argument("patterns", help="file of pattern lines")
    p.add_argument("--id", required=True)
    p.add_argument("--evidence", help="evidence blob from reduce")
    p.add_argument("--assert", dest="assert_reason",
                   help="record a manual assertion instead of evidence")

    sub.add_parser("load-paper", help="commit the shipped structure library")

    p = sub.add_parser("export", help="export the proof bundle")
    p.add_argument("--out")

    sub.add_parser("status", help="session summary")

    p = sub.add_parser("serve", help="serve the HTTP API")
    p.add_argument("--port", type=int, default=8321)
    p.add_argument("--host", default="127.0.0.1")

    args = ap.parse_args(argv)
    {"gen": cmd_gen, "solve": cmd_solve, "tight": cmd_tight, "reduce": cmd_reduce,
     "commit": cmd_commit, "load-paper": cmd_load_paper, "export": cmd_export,
     "status": cmd_status, "serve": cmd_serve}[args.cmd](args)


if __name__ == "__main__":
    main()
