"""Command-line entry point: ``algebroid {check,invariants,family,criteria,probe}``.

Exit codes: 0 clean, 1 a check failed, 2 bad input or internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .calg import check_comm_assoc, is_local_over_C, jacobson_radical
from .exactlin import Subspace
from .fixtures import KINDS, FixtureError, emit, load
from .leibniz import check_left_leibniz, leib_ideal
from .report import Check, PreconditionError
from .sl2family import (
    build_sl2_algebroid, levi_rows, probe_dim1_extension, verify_family_theorems,
)
from .tca import check_prop_C0C1, check_tca
from .valgd import (
    A0, VertexAlgebroid, a_partial_a, annihilator, check_containments, check_vertex_algebroid,
    criteria_engine, image_partial, ker_partial, rad_pairing,
)

OK, FAILED, BAD_INPUT = 0, 1, 2


def _out(text: str = "") -> None:
    print(text)


def _dump(doc: dict) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False))


def _violation_check(v, labels) -> Check:
    detail = v.describe(labels)[len(v.axiom_id):].lstrip()
    return Check(v.axiom_id, False, detail, list(v.witness))


def _axiom_suite(fx):
    kind, obj = fx.kind, fx.obj
    if kind == "comm_alg":
        return check_comm_assoc(obj)
    if kind == "leibniz":
        return check_left_leibniz(obj)
    if kind == "tca":
        return check_tca(obj)
    return check_vertex_algebroid(obj)


def cmd_check(args) -> int:
    fx = load(args.path)
    if args.kind and args.kind != fx.kind:
        raise FixtureError("file has kind %r, not %r" % (fx.kind, args.kind), args.path)
    labels = fx.labels or None
    bad = _axiom_suite(fx)
    checks = [Check("axioms", not bad, "%d violations" % len(bad))]
    checks += [_violation_check(v, labels) for v in bad]
    extra = check_prop_C0C1(fx.obj) if fx.kind == "tca" else None
    if extra is not None:
        checks += extra.checks
    failed = bool(bad) or (extra is not None and not extra.ok)
    if args.json:
        _dump({"fixture": fx.name or args.path, "kind": fx.kind,
               "checks": [c.to_json() for c in checks]})
    else:
        _out("%s (%s)" % (fx.name or args.path, fx.kind))
        for c in checks:
            _out(c.line())
    return FAILED if failed else OK


def _span_text(b: VertexAlgebroid, space: str, s: Subspace) -> str:
    if s.is_zero():
        return "0"
    if s.is_full():
        return space
    return "span{%s}" % ", ".join(b.describe_vector(space, r) for r in s.basis)


def _invariant_summary(b, rad, leib, dA, ann, kd, local) -> str:
    parts = ["rad = 0" if rad.is_zero() else "dim rad = %d" % rad.dim]
    if leib.is_zero():
        parts.append("Leib = 0")
    elif leib == dA == ann:
        parts.append("Ann = dA = Leib (dim %d)" % leib.dim)
    else:
        parts.append("dim Leib = %d, dim dA = %d, dim Ann = %d" % (leib.dim, dA.dim, ann.dim))
    parts.append("Ker d = " + ("A" if kd.is_full() else _span_text(b, "A", kd)))
    parts.append("A local" if local else "A not local")
    return "; ".join(parts)


def cmd_invariants(args) -> int:
    fx = load(args.path)
    if fx.kind != "vertex_algebroid":
        raise FixtureError("invariants needs a vertex_algebroid fixture, got %r" % fx.kind, args.path)
    b = fx.obj
    bad = check_vertex_algebroid(b)
    if bad:
        labels = fx.labels or None
        if args.json:
            _dump({"fixture": fx.name or args.path,
                   "checks": [_violation_check(v, labels).to_json() for v in bad]})
        else:
            _out("axiom check failed, invariants not computed")
            for v in bad:
                _out("FAIL  " + v.describe(labels))
        return FAILED
    L = b.leibniz()
    spaces = [
        ("Leib", "G", leib_ideal(L)), ("rad", "G", rad_pairing(b)), ("Ann", "G", annihilator(b)),
        ("APartialA", "G", a_partial_a(b)), ("dA", "G", image_partial(b)),
        ("Ker d", "A", ker_partial(b)), ("A0", "A", A0(b)), ("J", "A", jacobson_radical(b.a)),
    ]
    local = is_local_over_C(b.a)
    cont = check_containments(b)
    named = {n: s for n, _, s in spaces}
    summary = _invariant_summary(b, named["rad"], named["Leib"], named["dA"], named["Ann"],
                                 named["Ker d"], local)
    if args.json:
        _dump({
            "fixture": fx.name or args.path,
            "subspaces": {n: {"dim": s.dim, "basis": [[str(x) for x in r] for r in s.basis]}
                          for n, _, s in spaces},
            "local": local,
            "summary": summary,
            "checks": [c.to_json() for c in cont.checks],
        })
    else:
        for n, sp, s in spaces:
            _out("%-10s dim %d  %s" % (n, s.dim, _span_text(b, sp, s)))
        _out("A is %slocal" % ("" if local else "not "))
        for line in cont.lines():
            _out(line)
        _out(summary)
    return OK if cont.ok else FAILED


def cmd_family(args) -> int:
    if args.l < 1:
        raise ValueError("l must be >= 1")
    if args.emit:
        text = emit(build_sl2_algebroid(args.l), "sl2-family-l%d" % args.l,
                    subspaces={"levi": levi_rows(args.l)})
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return OK
    rep = verify_family_theorems(args.l)
    if args.json:
        _dump({"fixture": "sl2-family-l%d" % args.l, "checks": [c.to_json() for c in rep.checks]})
    else:
        _out(rep.title)
        for line in rep.lines():
            _out(line)
    return OK if rep.ok else FAILED


def _parse_levi(text: str, b: VertexAlgebroid):
    names = [t.strip() for t in text.split(",")]
    glabels = (b.labels or {}).get("G", [])
    if ";" not in text and all(n in glabels for n in names):
        return [b.eG(glabels.index(n)) for n in names]
    rows = []
    for r in text.split(";"):
        try:
            rows.append(tuple(Fraction(x.strip()) for x in r.split(",")))
        except (ValueError, ZeroDivisionError):
            raise ValueError("--levi expects basis labels 'e,f,h' or rows '1,0,...;0,1,...'") from None
    return rows


def cmd_criteria(args) -> int:
    fx = load(args.path)
    if fx.kind != "vertex_algebroid":
        raise FixtureError("criteria needs a vertex_algebroid fixture, got %r" % fx.kind, args.path)
    b = fx.obj
    levi = _parse_levi(args.levi, b) if args.levi else fx.subspaces.get("levi")
    try:
        v = criteria_engine(b, levi)
    except PreconditionError as exc:
        # an invalid algebroid gets no verdict, which is information, not an error
        if args.json:
            _dump({"fixture": fx.name or args.path, "checks": [],
                   "verdict": "NoVerdict: %s" % exc})
        else:
            _out("verdict: NoVerdict: %s" % exc)
        return OK
    if args.json:
        doc = v.to_json()
        doc["fixture"] = fx.name or args.path
        _dump(doc)
    else:
        for line in v.lines():
            _out(line)
    return OK


def cmd_probe(args) -> int:
    res = probe_dim1_extension("reference" if args.reference else args.variant)
    if args.json:
        _dump(res.to_json())
    else:
        for line in res.trace:
            _out(line)
        _out(res.verdict)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="algebroid", description="Exact verification of vertex algebroids.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run the axiom suite for a fixture")
    c.add_argument("path")
    c.add_argument("--kind", choices=KINDS)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    i = sub.add_parser("invariants", help="derived subspaces and containments")
    i.add_argument("path")
    i.add_argument("--json", action="store_true")
    i.set_defaults(func=cmd_invariants)

    f = sub.add_parser("family", help="emit or verify the sl2 family")
    f.add_argument("--l", type=int, required=True)
    mode = f.add_mutually_exclusive_group(required=True)
    mode.add_argument("--emit", action="store_true")
    mode.add_argument("--verify", action="store_true")
    f.add_argument("-o", "--output")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_family)

    k = sub.add_parser("criteria", help="evaluate the indecomposable/non-simple criteria")
    k.add_argument("path")
    k.add_argument("--levi", help="'e,f,h' basis labels or ';'-separated coordinate rows")
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_criteria)

    r = sub.add_parser("probe", help="search for a 1-dimensional extension of sl2")
    which = r.add_mutually_exclusive_group(required=True)
    which.add_argument("--variant", choices=("unit", "nil"))
    which.add_argument("--reference", action="store_true")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_probe)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else BAD_INPUT
    try:
        return args.func(args)
    except FixtureError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return BAD_INPUT
    except Exception as exc:  # exit codes stay total
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
