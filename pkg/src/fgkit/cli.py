"""Command-line front end.

Exit status: 0 when the checked claim holds (or nothing is claimed), 1 when it
is refuted, 2 on errors or inconclusive results.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import benson, catalog
from .algebra import (TruncatedAlgebra, betti_sequence, check_weakly_symmetric, detect_periodicity,
                      ext1_matrix, Representation, simple_module)
from .centre import graded_centre_component, is_graded_central
from .fingen import FG, INCONCLUSIVE, module_quotient_dims
from .groebner import verify_groebner
from .koszul import quadratic_dual
from .quiver import MonomialOrder, parse_presentation

OK, REFUTED, ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _add_source(p, lam_flag=True):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--catalog", metavar="FAMILY", help=f"catalog family ({', '.join(catalog.FAMILIES)})")
    g.add_argument("--file", metavar="PATH", help="presentation file")
    p.add_argument("--n", type=int, help="family parameter n")
    p.add_argument("--q", help="deformation parameter (all q_ij for qext)")
    p.add_argument("--field", help="field: Q, Fp, Fp[t]/(f), Q[t]/(f), Q(t), Fp(t)")
    if lam_flag:
        p.add_argument("--lambda", dest="use_lambda", action="store_true",
                       help="act on Lambda instead of the dual (catalog input)")


def _add_common(p):
    p.add_argument("--max-degree", "-D", type=int, default=8, dest="max_degree")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")


def build_parser():
    ap = argparse.ArgumentParser(prog="fgkit", description="Finite generation toolkit for quiver algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="reduced truncated Groebner basis")
    _add_source(p); _add_common(p)
    p = sub.add_parser("verify-gb", help="check that the relations form a Groebner basis")
    _add_source(p); _add_common(p)
    p = sub.add_parser("dual", help="quadratic dual presentation")
    _add_source(p, lam_flag=False); _add_common(p)
    p = sub.add_parser("analyze", help="dimensions, weak symmetry and Ext^1 matrix of a finite algebra")
    _add_source(p, lam_flag=False); _add_common(p)
    p = sub.add_parser("centre", help="graded centre dimensions")
    _add_source(p); _add_common(p)
    p = sub.add_parser("verify-central", help="graded-centrality of named or written elements")
    _add_source(p); _add_common(p)
    p.add_argument("--element", action="append", required=True)
    p = sub.add_parser("fg-check", help="quotient dimensions over central elements")
    _add_source(p); _add_common(p)
    p.add_argument("--element", action="append")
    p.add_argument("--window", "-W", type=int)
    p.add_argument("--vertex", help="restrict to the corner e_v E e_v")
    p = sub.add_parser("classify", help="spectral class of the Ext^1 matrix")
    _add_source(p, lam_flag=False); _add_common(p)
    p.add_argument("--matrix", help="rows separated by ';', entries by ',' (instead of an algebra)")
    p = sub.add_parser("betti", help="minimal projective resolution of a module")
    _add_source(p, lam_flag=False); _add_common(p)
    p.add_argument("--vertex", help="use the simple module at this vertex")
    p.add_argument("--module", metavar="PATH", help='JSON {"dims": [...], "matrices": {arrow: rows}}')
    p.add_argument("--steps", type=int, default=8)
    p = sub.add_parser("catalog", help="list families or describe one")
    _add_source(p, lam_flag=False)
    p.add_argument("--json", metavar="PATH")
    return ap


# ---- inputs ---------------------------------------------------------------


def _spec(args):
    kw = {}
    if args.n is not None:
        kw["n"] = args.n
    if args.q is not None:
        kw["q"] = int(args.q) if _is_int(args.q) else args.q
    if args.field is not None:
        kw["field"] = args.field
    return catalog.build_family(args.catalog, **kw)


def _is_int(s):
    try:
        int(s)
        return True
    except ValueError:
        return False


def _load(args, prefer_lambda=False):
    """``(presentation, spec or None)``."""
    if args.catalog:
        spec = _spec(args)
        use_lambda = prefer_lambda or getattr(args, "use_lambda", False)
        return (spec.lambda_presentation if use_lambda else spec.dual_presentation), spec
    if args.file:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {args.file}: {exc.strerror}") from None
        try:
            return parse_presentation(text), None
        except ValueError as exc:
            raise CliError(f"{args.file}: {exc}") from None
    raise CliError("give --catalog FAMILY or --file PATH")


def _check_D(D):
    if D < 2:
        raise CliError("--max-degree must be at least 2")


def _config(args, pres, **extra):
    out = {
        "command": args.command,
        "source": ({"catalog": args.catalog, "n": args.n, "q": args.q} if getattr(args, "catalog", None)
                   else {"file": getattr(args, "file", None)}),
        "field": pres.field.descriptor if pres is not None else None,
        "order": list(MonomialOrder(pres.quiver).ranking) if pres is not None else None,
    }
    if hasattr(args, "max_degree"):
        out["max_degree"] = args.max_degree
    out.update(extra)
    return out


def _element(pres, spec, text):
    if spec is not None and (text in spec.recipes or catalog._POWER.match(text)
                             and catalog._POWER.match(text).group(1) in spec.recipes):
        return catalog.central_element(spec, text)
    try:
        return pres.element(text)
    except ValueError as exc:
        raise CliError(f"element {text!r}: {exc}") from None


# ---- commands -------------------------------------------------------------


def cmd_gb(args):
    pres, _ = _load(args)
    _check_D(args.max_degree)
    A = TruncatedAlgebra(pres, args.max_degree)
    gb = A.groebner_elements()
    rep = {"config": _config(args, pres), "groebner_basis": [g.format(A.order) for g in gb],
           "hilbert": A.dims()}
    text = "\n".join(rep["groebner_basis"]) + f"\nhilbert: {rep['hilbert']}"
    return OK, rep, text


def cmd_verify_gb(args):
    pres, _ = _load(args)
    _check_D(args.max_degree)
    order = MonomialOrder(pres.quiver)
    ok, failures = verify_groebner(pres.relations, order, args.max_degree)
    rep = {"config": _config(args, pres), "is_groebner": ok,
           "failures": [f"{desc}: remainder {rem.format(order)}" for desc, rem in failures]}
    text = "groebner basis: yes" if ok else "groebner basis: no\n" + "\n".join(rep["failures"])
    return (OK if ok else REFUTED), rep, text


def cmd_dual(args):
    pres, spec = _load(args, prefer_lambda=True)
    dual = quadratic_dual(pres)
    rep = {"config": _config(args, pres), "dual": dual.to_text()}
    status = OK
    if spec is not None:
        same = catalog.same_relation_space(dual, spec.dual_presentation)
        rep["matches_stated"] = same
        status = OK if same else REFUTED
    return status, rep, rep["dual"].rstrip()


def cmd_analyze(args):
    pres, _ = _load(args, prefer_lambda=True)
    _check_D(args.max_degree)
    A = TruncatedAlgebra(pres, args.max_degree)
    rep = {"config": _config(args, pres), "dims": A.dims(), "finite": A.finite}
    lines = [f"dims: {A.dims()}", f"finite: {A.finite}"]
    if A.finite:
        ws = check_weakly_symmetric(A)
        E = ext1_matrix(A)
        rep.update({"weakly_symmetric": ws, "ext1_matrix": E, "radical_cube_zero": A.top_degree <= 2})
        lines += [f"weakly symmetric: {ws}", f"radical cube zero: {A.top_degree <= 2}",
                  "ext1: " + "; ".join(",".join(map(str, r)) for r in E)]
    return OK, rep, "\n".join(lines)


def cmd_centre(args):
    pres, spec = _load(args)
    _check_D(args.max_degree)
    A = TruncatedAlgebra(pres, args.max_degree + 1)
    bases = {d: graded_centre_component(A, d) for d in range(args.max_degree + 1)}
    dims = {d: len(b) for d, b in bases.items()}
    rep = {"config": _config(args, pres), "dims": {str(d): n for d, n in dims.items()},
           "bases": {str(d): [z.format(A.order) for z in b] for d, b in bases.items()}}
    status = OK
    if spec is not None and not getattr(args, "use_lambda", False) and not spec.expected_fg:
        trivial = all(n == 0 for d, n in dims.items() if d > 0)
        rep["expectation"] = "trivial in positive degrees"
        rep["matches_expectation"] = trivial
        status = OK if trivial else REFUTED
    text = "\n".join(f"{d:4d} {n}" for d, n in dims.items())
    return status, rep, "degree dim\n" + text


def cmd_verify_central(args):
    pres, spec = _load(args)
    _check_D(args.max_degree)
    elems = [(t, _element(pres, spec, t)) for t in args.element]
    need = max((z.degree for _, z in elems if not z.is_zero() and z.is_homogeneous()), default=0) + 1
    if need > args.max_degree:
        raise CliError(f"--max-degree must be at least {need} for these elements")
    A = TruncatedAlgebra(pres, args.max_degree)
    results, lines, status = [], [], OK
    for t, z in elems:
        comps = z.homogeneous_components()
        entry = {"element": t, "degrees": sorted(comps), "central": True}
        for d, c in sorted(comps.items()):
            ok, wit = is_graded_central(A, c)
            if not ok:
                entry["central"] = False
                entry["witness"] = wit
                break
        entry["zero_in_algebra"] = all(not A.to_vector(c) for c in comps.values())
        if not entry["central"]:
            status = REFUTED
        results.append(entry)
        lines.append(f"{t}: degree {entry['degrees']} {'central' if entry['central'] else 'NOT central'}")
    rep = {"config": _config(args, pres), "results": results}
    return status, rep, "\n".join(lines)


def cmd_fg_check(args):
    pres, spec = _load(args)
    _check_D(args.max_degree)
    corner = None
    if args.vertex is not None:
        if args.vertex not in pres.quiver.vindex:
            raise CliError(f"unknown vertex {args.vertex!r}")
        corner = pres.quiver.vindex[args.vertex]
    if spec is not None and not getattr(args, "use_lambda", False) and corner is None:
        names = args.element
        rep_ = catalog.fg_check(spec, args.max_degree, W=args.window, names=names)
        expected = spec.expected_fg
    else:
        if not args.element:
            raise CliError("--element is required for file input")
        Z = [_element(pres, spec, t) for t in args.element]
        A = TruncatedAlgebra(pres, args.max_degree + 1)
        rep_ = module_quotient_dims(A, Z, D=args.max_degree, W=args.window, corner=corner)
        expected = None
    rep = {"config": _config(args, pres, window=rep_.window), **rep_.to_dict()}
    if rep_.verdict == INCONCLUSIVE:
        status = ERROR
    elif expected is None:
        status = OK
    else:
        rep["expected_fg"] = expected
        status = OK if (rep_.verdict == FG) == expected else REFUTED
    return status, rep, rep_.table()


def _parse_matrix(text):
    try:
        return [[int(x) for x in row.split(",")] for row in text.split(";")]
    except ValueError:
        raise CliError(f"malformed matrix {text!r}") from None


def cmd_classify(args):
    if args.matrix:
        E, pres, spec = _parse_matrix(args.matrix), None, None
    else:
        pres, spec = _load(args, prefer_lambda=True)
        E = ext1_matrix(TruncatedAlgebra(pres, 3))
    try:
        v = benson.spectral_class(E)
    except benson.MatrixError as exc:
        raise CliError(str(exc)) from None
    rep = {"config": _config(args, pres, matrix=E), **v.to_dict(),
           "certificate_verified": benson.verify_certificate(E, v)}
    status = OK if rep["certificate_verified"] else ERROR
    if spec is not None and spec.family != "radsq":
        status = OK if v.cls == benson.EQ2 else REFUTED
    text = f"class: {v.cls}"
    if v.diagram:
        text += f"\ndiagram: {v.diagram[0]}" + (f"{v.diagram[1]}" if v.diagram[1] is not None else "")
    return status, rep, text


def cmd_betti(args):
    pres, _ = _load(args, prefer_lambda=True)
    A = TruncatedAlgebra(pres, max(args.max_degree, 3))
    if not A.finite:
        raise CliError("the algebra is not finite-dimensional at this truncation; raise --max-degree")
    if args.module:
        try:
            with open(args.module) as fh:
                data = json.load(fh)
            M = Representation(pres, data["dims"], data.get("matrices", {}))
        except (OSError, KeyError, json.JSONDecodeError) as exc:
            raise CliError(f"cannot load module: {exc}") from None
    elif args.vertex is not None:
        M = simple_module(pres, args.vertex)
    else:
        raise CliError("give --vertex or --module")
    res = betti_sequence(A, M, args.steps)
    period = detect_periodicity(A, M, args.steps)
    rep = {"config": _config(args, pres, steps=args.steps), **res, "period": period}
    text = f"betti: {res['betti']}\nperiod: {period}"
    return OK, rep, text


def cmd_catalog(args):
    if args.catalog:
        spec = _spec(args)
        rep = {"config": {"command": "catalog"}, **spec.describe(),
               "lambda": spec.lambda_presentation.to_text(), "dual": spec.dual_presentation.to_text()}
        text = json.dumps(spec.describe(), indent=2, sort_keys=True)
    else:
        rep = {"config": {"command": "catalog"}, "families": list(catalog.FAMILIES),
               "grid": [[f, {k: str(v) for k, v in kw.items()}] for f, kw in catalog.catalog_grid()]}
        text = "\n".join(catalog.FAMILIES)
    return OK, rep, text


COMMANDS = {
    "gb": cmd_gb, "verify-gb": cmd_verify_gb, "dual": cmd_dual, "analyze": cmd_analyze,
    "centre": cmd_centre, "verify-central": cmd_verify_central, "fg-check": cmd_fg_check,
    "classify": cmd_classify, "betti": cmd_betti, "catalog": cmd_catalog,
}


def run(argv=None, out=None):
    """Run one command; returns the exit status."""
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        status, rep, text = COMMANDS[args.command](args)
    except (CliError, catalog.CatalogError, ValueError, ArithmeticError) as exc:
        print(f"fgkit: error: {exc}", file=sys.stderr)
        return ERROR
    rep["status"] = status
    payload = json.dumps(rep, indent=2, sort_keys=True, default=str)
    if args.json == "-":
        out.write(payload + "\n")
    else:
        out.write(text + "\n")
        if args.json:
            try:
                with open(args.json, "w") as fh:
                    fh.write(payload + "\n")
            except OSError as exc:
                print(f"fgkit: error: cannot write {args.json}: {exc.strerror}", file=sys.stderr)
                return ERROR
    return status


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
