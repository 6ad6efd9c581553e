"""Command line front end.

Every library operation is exposed as a subcommand; `--json` switches
any of them to machine-readable output.  Exit codes: 0 success, 1 domain
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .casebook import (
    analyze_record,
    condition_check,
    full_report,
    load_table,
    polarization_root,
    root_for_degree,
    uniqueness_for_record,
)
from .errors import LatticeLabError
from .fqf import (
    complement_quotient,
    discriminant_form,
    isotropic_subgroups,
)
from .lattice import GramLattice, build_lattice, named_lattice
from .nikulin import (
    LatticeInvariant,
    even_lattice_exists,
    primitive_embedding_into_even_unimodular_exists,
    saturations_keeping_primitive,
)
from .normalforms import (
    DiagonalAction,
    family_dimension,
    invariant_monomials,
    symplectic_weight_check,
)
from .rank2 import Rank2Form, rank2_automorphism_orders, rank2_enumerate, rank2_reduce
from .shortvec import short_vectors
from .symbol import form_from_symbol_text, is_isomorphic, signature_mod8, to_symbol


def _parse_gram(args) -> GramLattice:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            data = json.load(fh)
        if "name" in data:
            return named_lattice(data["name"], data.get("scale", 1))
        return build_lattice(data["gram"])
    if args.name:
        return named_lattice(args.name, args.scale)
    if args.gram:
        return build_lattice(json.loads(args.gram))
    raise LatticeLabError("provide --gram, --name or --file")


def _add_lattice_args(p):
    p.add_argument("--gram", help="row-major Gram matrix, e.g. [[2,1],[1,2]]")
    p.add_argument("--name", help="named lattice, e.g. E6, U, II(26,2), Lambda0")
    p.add_argument("--scale", type=int, default=1, help="rescale a named lattice")
    p.add_argument("--file", help="JSON file with a gram or name entry")


def _emit(args, data, human: str):
    if args.json:
        json.dump(data, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(human)


def _cmd_lattice_info(args):
    latt = _parse_gram(args)
    data = {"rank": latt.rank, "signature": list(latt.signature),
            "det": latt.det, "even": latt.even}
    if latt.even:
        data["discriminant_form"] = str(to_symbol(discriminant_form(latt)))
    lines = [f"rank       {latt.rank}",
             f"signature  {latt.signature}",
             f"det        {latt.det}",
             f"parity     {'even' if latt.even else 'odd'}"]
    if latt.even:
        lines.append(f"disc form  {data['discriminant_form']}")
    _emit(args, data, "\n".join(lines))


def _cmd_lattice_shortvec(args):
    latt = _parse_gram(args)
    vecs = short_vectors(latt, args.norm, rank_cap=args.rank_cap,
                         norm_cap=args.norm_cap)
    _emit(args, {"norm": args.norm, "count": len(vecs),
                 "vectors": [list(v) for v in vecs]},
          "\n".join(" ".join(map(str, v)) for v in vecs) or "(none)")


def _form_of(args):
    if args.form:
        return form_from_symbol_text(args.form)
    latt = _parse_gram(args)
    return discriminant_form(latt)


def _cmd_rank2_enum(args):
    forms = rank2_enumerate(args.det, negative=args.neg)
    _emit(args, {"det": args.det, "forms": [str(f) for f in forms]},
          "\n".join(str(f) for f in forms) or "(none)")


def _cmd_rank2_reduce(args):
    a, b, c = (int(x) for x in args.form.split(","))
    latt_sign = a < 0
    f = Rank2Form(abs(a), -b if latt_sign else b, abs(c), negative=latt_sign)
    red = rank2_reduce(f)
    _emit(args, {"reduced": [red.a, red.b, red.c], "negative": red.negative},
          str(red))


def _cmd_rank2_autorders(args):
    a, b, c = (int(x) for x in args.form.split(","))
    neg = a < 0
    f = Rank2Form(abs(a), -b if neg else b, abs(c), negative=neg)
    orders = sorted(rank2_automorphism_orders(f))
    _emit(args, {"orders": orders}, " ".join(map(str, orders)))


def _cmd_dform_of(args):
    latt = _parse_gram(args)
    q = discriminant_form(latt)
    _emit(args, {"symbol": str(to_symbol(q)), "order": q.order,
                 "form": q.to_json_dict()},
          f"{to_symbol(q)}  (group order {q.order})")


def _cmd_dform_symbol(args):
    q = form_from_symbol_text(args.form)
    _emit(args, {"symbol": str(to_symbol(q)), "order": q.order,
                 "signature_mod8": signature_mod8(q)},
          f"canonical: {to_symbol(q)}   sig mod 8: {signature_mod8(q)}")


def _cmd_dform_iso(args):
    q1 = form_from_symbol_text(args.first)
    q2 = form_from_symbol_text(args.second)
    same = is_isomorphic(q1, q2)
    _emit(args, {"isomorphic": same}, "isomorphic" if same else "not isomorphic")


def _cmd_glue_isotropic(args):
    q = _form_of(args)
    subs = isotropic_subgroups(q)
    data = []
    for s in subs:
        quot = complement_quotient(q, s)
        data.append({"order": s.order, "gens": [list(g) for g in s.gens],
                     "quotient": str(to_symbol(quot))})
    _emit(args, {"count": len(subs), "subgroups": data},
          "\n".join(f"order {d['order']:3d} gens {d['gens']} -> quotient {d['quotient']}"
                    for d in data))


def _cmd_nikulin_exists(args):
    n1, n2 = (int(x) for x in args.sig.split(","))
    q = form_from_symbol_text(args.form)
    verdict = even_lattice_exists(LatticeInvariant(n1, n2, q))
    _emit(args, verdict.to_json_dict(),
          f"exists: {verdict.exists}" +
          ("" if verdict.exists else f"   (fails condition {verdict.failed_condition}: {verdict.detail})"))


def _cmd_nikulin_embed(args):
    n1, n2 = (int(x) for x in args.sig.split(","))
    l1, l2 = (int(x) for x in args.target.split(","))
    q = form_from_symbol_text(args.form)
    verdict, comp = primitive_embedding_into_even_unimodular_exists(
        LatticeInvariant(n1, n2, q), (l1, l2))
    data = verdict.to_json_dict()
    data["complement"] = comp.to_json_dict() if comp else None
    human = f"exists: {verdict.exists}"
    if comp:
        human += f"   complement signature {comp.n_plus},{comp.n_minus} form {to_symbol(comp.form)}"
    _emit(args, data, human)


def _cmd_saturate(args):
    q_s = form_from_symbol_text(args.first)
    q_r = form_from_symbol_text(args.second)
    wits = saturations_keeping_primitive(q_s, q_r)
    _emit(args, {"witnesses": [w.to_json_dict() for w in wits]},
          "\n".join(f"index {w.index:3d} glue {[list(g) for g in w.glue_gens]} "
                    f"-> quotient {to_symbol(w.quotient)}" for w in wits))


def _verdict_rows(report):
    return [v.to_json_dict() for v in report]


def _render_report(report):
    lines = []
    for v in report:
        mark = "pass" if v.passed else "FAIL"
        line = f"row {v.record.row:2d}  {v.record.group:14s} order {v.record.order:6d}  {mark}"
        if v.passed:
            for c in v.classes:
                line += f"  [T={c.form}"
                if c.embedding_count is not None:
                    line += f" embeddings={c.embedding_count}"
                if c.nonsymplectic is not None:
                    line += f" nbar={c.nonsymplectic} total={c.total_order}"
                line += "]"
        else:
            line += "  " + v.reason
        lines.append(line)
    return "\n".join(lines)


def _cmd_cubic_check(args):
    report = full_report("hm15", "E6", workers=args.threads)
    if args.row is not None:
        report = [v for v in report if v.record.row == args.row]
    _emit(args, {"table": "hm15", "root": "E6", "rows": _verdict_rows(report)},
          _render_report(report))


def _cmd_k3_check(args):
    root = root_for_degree(args.degree)
    report = full_report("k3max11", root.name, workers=args.threads)
    if args.row is not None:
        report = [v for v in report if v.record.row == args.row]
    _emit(args, {"table": "k3max11", "degree": args.degree, "root": root.name,
                 "rows": _verdict_rows(report)},
          _render_report(report))


def _record(table, row):
    recs = [r for r in load_table(table) if r.row == row]
    if not recs:
        raise LatticeLabError(f"no row {row} in table {table}")
    return recs[0]


def _cmd_uniqueness(args):
    rec = _record(args.table, args.row)
    unique, note = uniqueness_for_record(rec)
    _emit(args, {"row": args.row, "unique": unique, "note": note},
          f"row {args.row} ({rec.group}): {note}")


def _cmd_nonsymplectic(args):
    rec = _record("hm15", args.row)
    verdict = analyze_record(rec, polarization_root("E6"))
    data = [c.to_json_dict() for c in verdict.classes]
    human = "\n".join(
        f"T={c.form}  nbar={c.nonsymplectic}  total order={c.total_order}"
        for c in verdict.classes) or "row does not pass the criterion"
    _emit(args, {"row": args.row, "classes": data}, human)


def _cmd_family_dim(args):
    weights = tuple(int(x) for x in args.weights.split(","))
    act = DiagonalAction(args.order, weights, args.w0)
    dim = family_dimension(act)
    _emit(args, {"dim": dim, "monomials": len(invariant_monomials([act]))},
          f"family dimension {dim}")


def _cmd_symplectic_check(args):
    weights = tuple(int(x) for x in args.weights.split(","))
    act = DiagonalAction(args.order, weights, args.w0)
    mons = invariant_monomials([act])
    ok = symplectic_weight_check(act, mons)
    _emit(args, {"symplectic": ok}, "symplectic" if ok else "not symplectic")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="latticelab",
                                  description=__doc__.splitlines()[0])
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    lattice = sub.add_parser("lattice", help="Gram lattice utilities")
    lsub = lattice.add_subparsers(dest="subcommand", required=True)
    p = lsub.add_parser("info", help="rank, signature, determinant, parity")
    _add_lattice_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lattice_info)
    p = lsub.add_parser("shortvec", help="vectors of a given norm, up to sign")
    _add_lattice_args(p)
    p.add_argument("--norm", type=int, required=True)
    p.add_argument("--rank-cap", type=int, default=8)
    p.add_argument("--norm-cap", type=int, default=100)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lattice_shortvec)

    rank2 = sub.add_parser("rank2", help="definite rank-2 forms")
    rsub = rank2.add_subparsers(dest="subcommand", required=True)
    p = rsub.add_parser("enum", help="all reduced even forms of a determinant")
    p.add_argument("--det", type=int, required=True)
    p.add_argument("--neg", action="store_true", help="negative definite")
    p.add_argument("--even", action="store_true", help="even forms (always on)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rank2_enum)
    p = rsub.add_parser("reduce", help="Gauss-reduce a form a,b,c")
    p.add_argument("--form", required=True, help="a,b,c")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rank2_reduce)
    p = rsub.add_parser("autorders", help="orders of the isometries of a,b,c")
    p.add_argument("--form", required=True, help="a,b,c")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rank2_autorders)

    dform = sub.add_parser("dform", help="finite quadratic forms")
    dsub = dform.add_subparsers(dest="subcommand", required=True)
    p = dsub.add_parser("of", help="discriminant form of an even lattice")
    _add_lattice_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dform_of)
    p = dsub.add_parser("symbol", help="canonicalize a genus symbol")
    p.add_argument("--form", required=True, help="genus symbol text")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dform_symbol)
    p = dsub.add_parser("iso", help="isometry test for two symbols")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dform_iso)

    glue = sub.add_parser("glue", help="isotropic subgroup machinery")
    gsub = glue.add_subparsers(dest="subcommand", required=True)
    p = gsub.add_parser("isotropic", help="isotropic subgroups with quotients")
    p.add_argument("--form", help="genus symbol text")
    _add_lattice_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_glue_isotropic)

    nik = sub.add_parser("nikulin", help="even lattice existence / embeddings")
    nsub = nik.add_subparsers(dest="subcommand", required=True)
    p = nsub.add_parser("exists", help="even lattice with given invariants")
    p.add_argument("--sig", required=True, help="n_plus,n_minus")
    p.add_argument("--form", required=True, help="genus symbol text")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_nikulin_exists)
    p = nsub.add_parser("embed", help="primitive embedding into II(l1,l2)")
    p.add_argument("--sig", required=True, help="n_plus,n_minus")
    p.add_argument("--form", required=True, help="genus symbol text")
    p.add_argument("--target", default="26,2", help="l1,l2 (default 26,2)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_nikulin_embed)

    p = sub.add_parser("saturate", help="overlattices keeping the first factor primitive")
    p.add_argument("first", help="genus symbol of q_S")
    p.add_argument("second", help="genus symbol of q_R")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_saturate)

    cubic = sub.add_parser("cubic", help="cubic fourfold classification")
    csub = cubic.add_subparsers(dest="subcommand", required=True)
    p = csub.add_parser("check", help="run the criterion over the rank-4 table")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--row", type=int)
    group.add_argument("--all", action="store_true", default=True)
    p.add_argument("--threads", type=int, default=1,
                   help="evaluate rows on a thread pool; output unchanged")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cubic_check)

    k3 = sub.add_parser("k3", help="low degree K3 classification")
    ksub = k3.add_subparsers(dest="subcommand", required=True)
    p = ksub.add_parser("check", help="run the criterion over the rank-5 table")
    p.add_argument("--degree", type=int, required=True, choices=(0, 2, 4, 6))
    p.add_argument("--row", type=int)
    p.add_argument("--threads", type=int, default=1,
                   help="evaluate rows on a thread pool; output unchanged")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_k3_check)

    p = sub.add_parser("uniqueness", help="sufficient uniqueness of S in II(26,2)")
    p.add_argument("--row", type=int, required=True)
    p.add_argument("--table", default="hm15")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_uniqueness)

    p = sub.add_parser("nonsymplectic", help="non-symplectic order per class")
    p.add_argument("--row", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_nonsymplectic)

    p = sub.add_parser("family-dim", help="moduli dimension of a diagonal family")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--weights", required=True, help="six residues a,b,c,d,e,f")
    p.add_argument("--w0", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_family_dim)

    p = sub.add_parser("symplectic-check", help="weight condition for a diagonal action")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--weights", required=True, help="six residues a,b,c,d,e,f")
    p.add_argument("--w0", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_symplectic_check)

    return top


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except LatticeLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
