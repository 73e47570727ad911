"""Command-line interface.

Exit codes: 0 ok, 1 valid input but the checked property fails, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import io
from .catalog import (InvalidSpec, ModelSpec, alpha_count, default_alphas, dixmier_lister,
                      make_model, n74)
from .cohomology import NotACocycle, cn_zk_grading, deform_terms
from .derivations import derivation_space, diagonal_torus_rank, is_characteristically_nilpotent
from .gradings import (NotAGrading, classify, dixmier_lister_gamma, dixmier_lister_sign_grading,
                       enumerate_factor_gradings, standard_grading, universal_group, verify_grading)
from .lie import JacobiViolation, is_filiform

OK, NEGATIVE, INVALID = 0, 1, 2
NAMED = ("n74", "DL", "DL-gamma")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _parse_alphas(text):
    if text is None:
        return None
    if not text.strip():
        return ()
    try:
        return tuple(Fraction(x) for x in text.split(","))
    except ValueError as exc:
        raise InvalidSpec(f"bad alphas {text!r}") from exc


def _spec(args) -> ModelSpec:
    kind = args.kind
    if kind not in ("L", "Q", "A", "B"):
        raise InvalidSpec(f"unknown kind {kind!r}")
    if args.n is None:
        raise InvalidSpec(f"{kind} needs a dimension n")
    alphas = _parse_alphas(args.alphas)
    if kind in ("A", "B") and alphas is None and args.p is not None:
        alphas = default_alphas(kind, args.n, args.p)
        if alpha_count(kind, args.n, args.p) > 0:
            print(f"note: using alphas {','.join(map(str, alphas))}", file=sys.stderr)
    return ModelSpec(kind, args.n, args.p, alphas or ()).validate()


def _emit(text, out=None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(rows, header) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*header), fmt.format(*("-" * w for w in widths))]
    lines += [fmt.format(*r) for r in rows]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _algebra_text(a, origin) -> str:
    rows = []
    for (i, j), terms in a.constants.items():
        rhs = " + ".join(f"({c})*{a.labels[k]}" if c != 1 else a.labels[k] for k, c in terms)
        rows.append((f"[{a.labels[i]}, {a.labels[j]}]", rhs))
    return f"dim {a.dim}, basis origin {origin}\n" + _table(rows, ["bracket", "value"])


def _degrees_text(g) -> str:
    return " ".join("(" + ",".join(map(str, d)) + ")" for d in g.degrees)


def _load_algebra(path, origin):
    return io.algebra_from_doc(io.load(path), origin)


def _report_jacobi(exc: JacobiViolation, origin: int):
    print(f"error: {exc}", file=sys.stderr)
    for i, j, k, _ in exc.triples:
        print(f"  triple ({i + origin}, {j + origin}, {k + origin})", file=sys.stderr)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_make(args) -> int:
    o = args.basis_origin
    grading = None
    if args.kind in NAMED:
        if args.kind == "n74":
            a, prov = n74(), {"name": "n74"}
        elif args.kind == "DL":
            a, prov = dixmier_lister(), {"name": "dixmier-lister"}
            grading = dixmier_lister_sign_grading()
        else:
            grading = dixmier_lister_gamma()
            a, prov = grading.algebra, {"name": "dixmier-lister", "basis": "eigenvectors"}
    else:
        spec = _spec(args)
        a = make_model(spec)
        prov = {"model": io.spec_to_json(spec)}
        grading = standard_grading(spec, a)
    if args.grading_out:
        if grading is None:
            raise UsageError("no grading is attached to this algebra")
        with open(args.grading_out, "w") as fh:
            fh.write(io.dumps(io.grading_to_doc(grading)))
    if args.format == "json":
        _emit(io.dumps(io.algebra_to_doc(a, o, prov)), args.out)
    else:
        _emit(_algebra_text(a, o), args.out)
    return OK


def cmd_classify(args) -> int:
    spec = _spec(args)
    table = classify(spec)
    agree = table.agreement()
    if args.format == "json":
        doc = {
            "model": io.spec_to_json(spec),
            "representatives": [{
                "label": r.label(),
                "universal_group": r.universal_group.to_json(),
                "stated_group": r.stated_group.to_json(),
                "degrees": [list(d) for d in r.grading.degrees],
                "note": r.note,
            } for r in table.representatives],
            "enumerated_count": table.enumerated_count,
            "list_count": table.list_count,
            "stated_totals": table.stated_totals,
            "agreement": {k: ("AGREE" if v else "DISAGREE") for k, v in agree.items()},
        }
        _emit(io.dumps(doc), args.out)
        return OK
    rows = []
    for r in table.representatives:
        flag = "" if r.group_agrees else f"stated {r.stated_group}"
        rows.append((r.label(), str(r.universal_group), _degrees_text(r.grading), flag))
    out = [f"{spec.label()}: {table.list_count} representatives\n",
           _table(rows, ["grading", "U", "degrees", "remark"])]
    out.append(f"enumerated factor-gradings: {table.enumerated_count}\n")
    out.append(f"list: {table.list_count} {'AGREE' if agree['list'] else 'DISAGREE'}\n")
    for where, value in table.stated_totals.items():
        out.append(f"{where} total: {value} {'AGREE' if agree[where] else 'DISAGREE'}\n")
    _emit("".join(out), args.out)
    return OK


def cmd_enumerate(args) -> int:
    spec = _spec(args)
    gradings = enumerate_factor_gradings(spec)
    o = args.basis_origin
    if args.format == "json":
        _emit(io.dumps({"model": io.spec_to_json(spec), "count": len(gradings),
                        "gradings": [io.grading_to_doc(g) for g in gradings]}), args.out)
        return OK
    rows = []
    for g in gradings:
        blocks = " | ".join(",".join(str(i + o) for i in b) for b in g.partition())
        rows.append((str(g.group), blocks))
    _emit(f"{spec.label()}: {len(gradings)} factor-gradings\n" + _table(rows, ["U", "components"]),
          args.out)
    return OK


def cmd_check(args) -> int:
    a = _load_algebra(args.algebra, args.basis_origin)
    g = io.grading_from_doc(io.load(args.grading), a)
    v = verify_grading(g)
    o = args.basis_origin
    if v is None:
        group, _ = universal_group(g)
        doc = {"ok": True, "universal_group": str(group), "components": len(g.components())}
    else:
        doc = {"ok": False, "i": v.i + o, "j": v.j + o, "witness": v.witness + o}
    if args.format == "json":
        _emit(io.dumps(doc), args.out)
    elif v is None:
        _emit(f"ok: U = {doc['universal_group']}, {doc['components']} components\n", args.out)
    else:
        _emit(f"violation: [{a.labels[v.i]}, {a.labels[v.j]}] has a term {a.labels[v.witness]} "
              f"of the wrong degree (i={v.i + o}, j={v.j + o}, k={v.witness + o})\n", args.out)
    return OK if v is None else NEGATIVE


def cn_report(a) -> dict:
    flag, nil = is_filiform(a)
    der = derivation_space(a)
    cn = is_characteristically_nilpotent(a, der)
    if cn:
        rank = 0
    elif flag:
        rank = diagonal_torus_rank(a)
    else:
        rank = None
    return {"filiform": flag, "nilindex": nil, "rank": rank,
            "char_nilpotent": cn, "der_dim": der.dim}


def cmd_cn(args) -> int:
    rep = cn_report(_load_algebra(args.algebra, args.basis_origin))
    if args.format == "json":
        _emit(io.dumps(rep), args.out)
    else:
        _emit("".join(f"{k}: {json.dumps(v)}\n" for k, v in rep.items()), args.out)
    return OK


def _parse_term(text):
    try:
        k, s, c = text.split(",")
        return int(k), int(s), Fraction(c)
    except ValueError as exc:
        raise InvalidSpec(f"bad term {text!r}; expected k,s,coeff") from exc


def cmd_deform(args) -> int:
    terms = [_parse_term(t) for t in args.term or []]
    if args.n < 3:
        raise InvalidSpec("n must be at least 3")
    for k, s, _ in terms:
        if not (1 <= k and 2 * k <= s <= args.n):
            raise InvalidSpec(f"psi_{{{k},{s}}} is out of range for n = {args.n}")
    a = deform_terms(args.n, terms)
    prov = {"deformation": {"n": args.n, "terms": [[k, s, str(c)] for k, s, c in terms]}}
    if args.format == "json":
        _emit(io.dumps(io.algebra_to_doc(a, args.basis_origin, prov)), args.out)
    else:
        _emit(_algebra_text(a, args.basis_origin), args.out)
    return OK


def cmd_zk(args) -> int:
    a = _load_algebra(args.algebra, args.basis_origin)
    try:
        g = cn_zk_grading(a, args.k)
    except NotAGrading as exc:
        print(f"not graded: {exc}", file=sys.stderr)
        return NEGATIVE
    if args.format == "json":
        _emit(io.dumps(io.grading_to_doc(g)), args.out)
    else:
        _emit(f"{g.group}: {_degrees_text(g)}\n", args.out)
    return OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def common(fmt="json"):
        c = argparse.ArgumentParser(add_help=False)
        c.add_argument("--out", help="write the report or document to this file")
        c.add_argument("--format", choices=("json", "text"), default=fmt)
        c.add_argument("--basis-origin", type=int, choices=(0, 1), default=0)
        return c

    model = argparse.ArgumentParser(add_help=False)
    model.add_argument("kind")
    model.add_argument("n", type=int, nargs="?")
    model.add_argument("--p", type=int)
    model.add_argument("--alphas", help="comma separated rationals, e.g. 1,-1/2")

    parser = argparse.ArgumentParser(prog="filigrade", description="Gradings of filiform Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("make", parents=[common(), model],
                       help="build a model algebra (L, Q, A, B, n74, DL, DL-gamma)")
    p.add_argument("--grading-out", help="also write the attached grading document here")
    p.set_defaults(func=cmd_make)

    p = sub.add_parser("classify", parents=[common(), model], help="grading classification table")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", parents=[common(), model], help="all factor-gradings of the standard grading")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", parents=[common()], help="verify a grading document")
    p.add_argument("algebra")
    p.add_argument("grading")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cn", parents=[common()], help="filiformity, rank and characteristic nilpotency")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_cn)

    p = sub.add_parser("deform", parents=[common()], help="mu_0 + sum c psi_{k,s} on L_{n+1}")
    p.add_argument("n", type=int)
    p.add_argument("--term", action="append", help="k,s,coeff (repeatable)")
    p.set_defaults(func=cmd_deform)

    p = sub.add_parser("zk", parents=[common()], help="Z_k-grading of a deformation")
    p.add_argument("algebra")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_zk)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INVALID if exc.code else OK
    origin = getattr(args, "basis_origin", 0)
    try:
        return args.func(args)
    except JacobiViolation as exc:
        _report_jacobi(exc, origin)
        return INVALID
    except NotACocycle as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID
    except (InvalidSpec, io.DocumentError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
