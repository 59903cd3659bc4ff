"""
Classify smooth Fano polytopes and certify their Ewald conditions.

Exit codes: 0 when the command succeeded and every checked condition holds,
1 when a checked condition fails or a counterexample is found, 2 for input
or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import classify as C
from .ewald import (
    find_star_ewald_point,
    star_ewald,
    strong_ewald,
    strong_ewald_transform,
    transform_witness,
    weak_ewald,
)
from .polytope import dual_polytope, is_reflexive, is_smooth_fano, is_unimodular_polytope
from .tumatrix import is_totally_unimodular, standard_form

OK, FAIL, USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _load(source: str) -> List[C.CorpusEntry]:
    """A corpus path, or ``builtin:D`` for the packaged dimension-D corpus."""
    try:
        if source.startswith("builtin:"):
            return C.bundled_corpus(int(source.split(":", 1)[1]))
        return C.load_corpus(source)
    except (OSError, ValueError) as exc:
        raise InputError(str(exc)) from None


def _entry(args) -> C.CorpusEntry:
    for e in _load(args.corpus):
        if e.id == args.id:
            return e
    raise InputError(f"id {args.id!r} not found in {args.corpus}")


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _smooth_fano(entry):
    try:
        P = entry.polytope()
    except ValueError as exc:
        raise InputError(f"{entry.id}: {exc}") from None
    if not is_smooth_fano(P):
        raise InputError(f"{entry.id} is not a smooth Fano polytope")
    return P


def cmd_classify(args) -> int:
    entries = _load(args.corpus)
    result = C.classify_corpus(entries, jobs=args.jobs, timeout=args.timeout, max_dim=args.max_dim)
    _emit(result.table(args.format), args.out)
    if args.records:
        with open(args.records, "w") as fh:
            fh.write(result.records_jsonl())
    return OK


def cmd_verify(args) -> int:
    """Flags plus the checks every unimodular smooth Fano polytope must pass."""
    entry = _entry(args)
    rec = C.classify_polytope(entry, timeout=args.timeout)
    report = {"record": json.loads(rec.to_json()), "checks": {}}
    status = OK
    inc = C.check_inclusions([rec])
    report["checks"]["implications"] = {k: not v for k, v in inc.violations.items()}
    if not inc.ok:
        status = FAIL
    if rec.flags["usfp"]:
        P = entry.polytope()
        checks = report["checks"]
        checks["strong_ewald"] = bool(strong_ewald(P))
        checks["star_ewald"] = bool(star_ewald(P))
        try:
            checks["hypercube_transforms"] = [
                [list(r) for r in strong_ewald_transform(P, i)] for i in range(len(P.vertices))]
            Q = dual_polytope(P)
            checks["star_points"] = [list(find_star_ewald_point(P, f)) for f in Q.faces()]
        except ValueError as exc:
            checks["construction_error"] = str(exc)
            status = FAIL
        if not (checks["strong_ewald"] and checks["star_ewald"]):
            status = FAIL
    print(json.dumps(report, indent=2))
    return status


def cmd_ewald(args) -> int:
    P = _smooth_fano(_entry(args))
    if not is_reflexive(P):
        raise InputError("polytope is not reflexive")
    if args.condition == "weak":
        w = weak_ewald(P)
        ok, payload = w is not None, (None if w is None else [list(p) for p in w.points])
    elif args.condition == "strong":
        rep = strong_ewald(P)
        ok = rep.ok
        payload = {"failure_facet": rep.failure,
                   "bases": [[list(p) for p in w.points] for w in rep.witnesses]}
        if ok and is_unimodular_polytope(P):
            payload["transforms"] = [
                [list(p) for p in transform_witness(P, i, strong_ewald_transform(P, i)).transform]
                for i in range(len(P.vertices))]
    else:
        rep = star_ewald(P)
        ok = rep.ok
        payload = {"failure_face": rep.failure,
                   "points": [list(w.points[0]) for w in rep.witnesses]}
    print(f"{args.condition} Ewald condition: {'holds' if ok else 'fails'}")
    if args.witness:
        print(json.dumps(payload))
    return OK if ok else FAIL


def cmd_dual(args) -> int:
    entry = _entry(args)
    try:
        P = entry.polytope()
    except ValueError as exc:
        raise InputError(str(exc)) from None
    try:
        if not is_reflexive(P):
            print(f"{entry.id} is not reflexive", file=sys.stderr)
            return FAIL
    except ValueError as exc:
        print(f"{entry.id}: {exc}", file=sys.stderr)
        return FAIL
    Q = dual_polytope(P)
    print(C.CorpusEntry(entry.id + ".dual", entry.dim, Q.vertices).to_json())
    return OK


def cmd_standard_form(args) -> int:
    P = _smooth_fano(_entry(args))
    try:
        M = standard_form(P, args.facet)
    except IndexError as exc:
        raise InputError(str(exc)) from None
    for row in M:
        print(" ".join(f"{x:3d}" for x in row))
    tu = is_totally_unimodular(M)
    print(f"totally unimodular: {'yes' if tu else 'no'}")
    return OK


def cmd_gen2(args) -> int:
    entries = C.generate_dim2_corpus()
    _emit("".join(e.to_json() + "\n" for e in entries), args.out)
    return OK


def cmd_check_inclusions(args) -> int:
    result = C.classify_corpus(_load(args.corpus), jobs=args.jobs, timeout=args.timeout)
    rep = C.check_inclusions(result.records)
    sys.stdout.write(rep.render())
    found = any(rep.conjecture_counterexamples["dual_ut_free => usfp"])
    return OK if rep.ok and not found else FAIL


def cmd_import_polydb(args) -> int:
    try:
        entries = C.import_polydb(args.file)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from None
    _emit("".join(e.to_json() + "\n" for e in entries), args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="usfp", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    corpus_help = "JSON-lines corpus file, or builtin:D for the packaged dimension-D corpus"

    s = sub.add_parser("classify", help="count table for a corpus")
    s.add_argument("--corpus", required=True, help=corpus_help)
    s.add_argument("--format", choices=("md", "csv", "json"), default="md")
    s.add_argument("--out")
    s.add_argument("--records", help="also write per-polytope records as JSON lines")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--max-dim", type=int)
    s.add_argument("--timeout", type=float, help="seconds allowed for the digraph search")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verify", help="all flags and certificates for one polytope")
    s.add_argument("--corpus", required=True, help=corpus_help)
    s.add_argument("--id", required=True)
    s.add_argument("--timeout", type=float)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("ewald", help="check one Ewald condition")
    s.add_argument("--corpus", required=True, help=corpus_help)
    s.add_argument("--id", required=True)
    s.add_argument("--condition", choices=("weak", "strong", "star"), required=True)
    s.add_argument("--witness", action="store_true")
    s.set_defaults(func=cmd_ewald)

    s = sub.add_parser("dual", help="print the dual polytope")
    s.add_argument("--corpus", required=True, help=corpus_help)
    s.add_argument("--id", required=True)
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("standard-form", help="vertex matrix in the basis of one facet")
    s.add_argument("--corpus", required=True, help=corpus_help)
    s.add_argument("--id", required=True)
    s.add_argument("--facet", type=int, required=True)
    s.set_defaults(func=cmd_standard_form)

    s = sub.add_parser("gen2", help="generate all smooth Fano polygons")
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen2)

    s = sub.add_parser("check-inclusions", help="classify and test the flag implications")
    s.add_argument("--corpus", required=True, help=corpus_help)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--timeout", type=float)
    s.set_defaults(func=cmd_check_inclusions)

    s = sub.add_parser("import-polydb", help="convert a polyDB JSON export to a corpus")
    s.add_argument("file")
    s.add_argument("--out")
    s.set_defaults(func=cmd_import_polydb)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
