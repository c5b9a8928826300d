"""Command-line front end.

One verb per invocation; every verb accepts --json for the structured
report and prints aligned text otherwise. Exit codes: 0 for success or a
certified result, 2 for bounds-only or conditional results, 3 for refuted
or refused checks, 1 for usage and input errors. Output carries no color
codes, so NO_COLOR needs no special handling.
"""

from __future__ import annotations

import argparse
import json
import sys

from .apolar import catalecticant, hf, minimal_generators, perp
from .bounds import certify, essential_vars, lower_bound, upper_bound_from_points
from .linalg import matrix_rank
from .errors import ApolarityError, ParseError
from .families import (classify, monomial_certificate, sylvester,
                       vandermonde, x0a_g_certificate, xa_sum_b_rank)
from .parser import parse_extension, parse_poly
from .poly import Poly, VarSet, restrict_to_vars, split_disjoint
from .strassen import strassen_rank

ERROR_ORIGIN = {
    "ZeroInversion": "fields", "NotInvertible": "fields",
    "InvalidExtension": "fields",
    "VarSetMismatch": "poly", "FieldMismatch": "poly",
    "NonHomogeneous": "poly", "ZeroForm": "poly",
    "AmbientMismatch": "linalg",
    "EmptyGeneratorList": "apolar", "DegreeMismatch": "apolar",
    "TNotInIdeal": "bounds", "EOutOfRange": "bounds",
    "PointsNotApolar": "bounds", "DuplicatePoint": "bounds",
    "NotBinary": "families", "NotMonomial": "families",
    "ParameterOutOfRange": "families", "NotCIShape": "families",
    "HypothesisViolated": "families", "NOutOfRange": "families",
    "MixedDegrees": "strassen",
    "UnknownVariable": "parser", "ParseError": "parser",
}

FAMILY_LABEL = {
    "Monomial": "monomial", "Binary": "binary", "XaSumB": "power-times-sum",
    "XaSumBPlusPower": "power-times-sum", "X0aG": "power-times-form",
    "Vandermonde": "vandermonde", "None": "generic",
}


def _dual_str(p: Poly) -> str:
    # contraction operators print with the first letter of each variable
    # uppercased
    names = tuple(n[0].upper() + n[1:] for n in p.varset.names)
    return str(Poly(VarSet(names), dict(p.terms), p.field))


def _read_expr(text: str) -> str:
    if text == "-":
        return sys.stdin.read()
    return text


def _load_form(args) -> Poly:
    field = None
    gen_name = None
    if getattr(args, "ext", None):
        gen_name, field = parse_extension(args.ext)
    varnames = None
    if getattr(args, "vars", None):
        varnames = tuple(v.strip() for v in args.vars.split(",") if v.strip())
    return parse_poly(_read_expr(args.expr), varnames=varnames, field=field,
                      gen_name=gen_name), field, gen_name


def _parse_ops(text: str, form: Poly, gen_name) -> list[Poly]:
    out = []
    for piece in text.split(";"):
        piece = piece.strip()
        if piece:
            out.append(parse_poly(piece, varnames=form.varset,
                                  field=form.field, gen_name=gen_name,
                                  alias=True))
    return out


def _parse_points(text: str, form: Poly, gen_name) -> list[tuple]:
    points = []
    dummy = ("c",)
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        coords = []
        for item in chunk.split(","):
            p = parse_poly(item.strip(), varnames=dummy, field=form.field,
                           gen_name=gen_name)
            if any(sum(e) > 0 for e in p.terms):
                raise ParseError("point coordinates must be scalars", 0)
            coords.append(p.coeff((0,)))
        points.append(tuple(coords))
    return points


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        for line in lines:
            print(line)


def _hf_rows(values) -> list[str]:
    return [f"{i}: {v}" for i, v in enumerate(values)]


def _cmd_perp(args):
    f, _, _ = _load_form(args)
    D = args.degree_cap if args.degree_cap is not None else f.degree() + 1
    ideal = perp(f, D)
    lines = []
    slices = []
    for i, sl in enumerate(ideal.slices):
        basis = [_dual_str(p) for p in ideal.slice_polys(i)]
        slices.append({"degree": i, "dim": sl.dim, "basis": basis})
        lines.append(f"degree {i}: dim {sl.dim}")
        for b in basis:
            lines.append(f"  {b}")
    data = {"module": "apolar", "form": str(f), "degree_cap": D,
            "slices": slices}
    _emit(args, data, lines)
    return 0


def _cmd_gens(args):
    f, _, _ = _load_form(args)
    D = args.degree_cap if args.degree_cap is not None else f.degree() + 1
    gens = minimal_generators(perp(f, D))
    lines = [f"deg {g.degree()}: {_dual_str(g)}" for g in gens]
    data = {"module": "apolar", "form": str(f), "degree_cap": D,
            "generators": [{"degree": g.degree(), "op": _dual_str(g)}
                           for g in gens]}
    _emit(args, data, lines)
    return 0


def _cmd_hf(args):
    f, _, _ = _load_form(args)
    D = args.degree_cap if args.degree_cap is not None else f.degree() + 1
    profile = hf(perp(f, D))
    data = {"module": "apolar", "form": str(f),
            "values": list(profile.values), "total": profile.total()}
    _emit(args, data, _hf_rows(profile.values))
    return 0


def _cmd_cat(args):
    f, _, _ = _load_form(args)
    if args.e is None:
        raise ParseError("cat requires --e", 0)
    c = catalecticant(f, args.e)
    r = matrix_rank(c.matrix)
    data = {"module": "apolar", "form": str(f), "e": args.e,
            "rows": c.matrix.nrows, "cols": c.matrix.ncols, "rank": r}
    _emit(args, data, [f"catalecticant C_{args.e}: "
                       f"{c.matrix.nrows} x {c.matrix.ncols}, rank {r}"])
    return 0


def _cmd_lb(args):
    f, _, gen_name = _load_form(args)
    if args.ideal:
        gens = _parse_ops(args.ideal, f, gen_name)
    else:
        gens = [Poly.variable(f.varset, i, field=f.field)
                for i in range(len(f.varset))]
    t = None
    if args.t:
        ops = _parse_ops(args.t, f, gen_name)
        t = ops[0] if ops else None
    w = lower_bound(f, gens, t, args.seed)
    lines = [f"e = {w.e}",
             "ideal = (" + ", ".join(_dual_str(g) for g in w.gens) + ")",
             f"t = {_dual_str(w.t)}", "hf:"]
    lines += _hf_rows(w.profile.values)
    lines.append(f"lower bound = {w.bound} ({w.validity})")
    data = {"module": "bounds", "form": str(f)}
    data.update(w.as_dict())
    _emit(args, data, lines)
    return 0


def _cmd_ub(args):
    f, _, gen_name = _load_form(args)
    if not args.points:
        raise ParseError("ub requires --points", 0)
    pts = _parse_points(args.points, f, gen_name)
    witness = upper_bound_from_points(f, pts)
    if witness is None:
        msg = "the given points admit no decomposition of the form"
        _emit(args, {"module": "bounds", "form": str(f), "count": None,
                     "refuted": True, "message": msg}, [msg])
        return 3
    d = witness.as_dict()
    lines = [f"count = {witness.count}"]
    for p, c in zip(d["points"], d["coefficients"]):
        lines.append(f"point ({', '.join(p)}): coefficient {c}")
    data = {"module": "bounds", "form": str(f)}
    data.update(d)
    _emit(args, data, lines)
    return 0


def _cmd_certify(args):
    f, _, gen_name = _load_form(args)
    if not args.ideal:
        raise ParseError("certify requires --ideal", 0)
    gens = _parse_ops(args.ideal, f, gen_name)
    t = None
    if args.t:
        ops = _parse_ops(args.t, f, gen_name)
        t = ops[0] if ops else None
    points = _parse_points(args.points, f, gen_name) if args.points else None
    cert = certify(f, gens, t, points, args.seed)
    data = {"module": "bounds"}
    data.update(cert.as_dict())
    lines = [f"status = {cert.status}",
             f"lower bound = {cert.lower.bound} (e = {cert.lower.e}, "
             f"{cert.lower.validity})"]
    if cert.upper is not None:
        lines.append(f"points = {cert.upper.count}")
    if cert.rank is not None:
        lines.append(f"rank = {cert.rank}")
        _emit(args, data, lines)
        return 0
    _emit(args, data, lines)
    return 2


def _cmd_rank(args):
    f, _, _ = _load_form(args)
    match = classify(f)
    label = FAMILY_LABEL.get(match.tag, "generic")
    data = {"module": "families", "form": str(f), "family": label}

    if match.tag == "Monomial":
        cert = monomial_certificate(f, args.e if args.e else 1)
        data.update(cert.as_dict())
        _emit(args, data, [f"rank = {cert.rank} ({label}, certified)"])
        return 0
    if match.tag == "Vandermonde":
        res = vandermonde(match.parameters["n"])
        data.update(res.as_dict())
        _emit(args, data, [f"rank = {res.rank} ({label}, certified)"])
        return 0
    if match.tag in ("XaSumB", "XaSumBPlusPower"):
        res = xa_sum_b_rank(match.parameters["a"], match.parameters["b"],
                            match.parameters["n"],
                            plus_power=match.tag == "XaSumBPlusPower",
                            seed=args.seed)
        data.update(res.as_dict())
        if res.rank is not None:
            _emit(args, data, [f"rank = {res.rank} ({label}, certified)"])
            return 0
        lo, hi = res.interval
        _emit(args, data, [f"{lo} <= rank <= {hi} ({label}, bounds only)"])
        return 2
    if match.tag == "X0aG":
        cert = x0a_g_certificate(f)
        data.update(cert.as_dict())
        if cert.rank is not None:
            _emit(args, data, [f"rank = {cert.rank} ({label}, certified)"])
            return 0
        _emit(args, data,
              [f"rank >= {cert.lower.bound} ({label}, bounds only)"])
        return 2
    if match.tag == "Binary":
        syl = sylvester(f)
        data.update({"h1": _dual_str(syl.h1), "h2": _dual_str(syl.h2),
                     "d1": syl.d1, "d2": syl.d2,
                     "squarefree_h1": syl.squarefree_h1, "rank": syl.rank})
        _emit(args, data, [f"rank = {syl.rank} ({label}, certified)"])
        return 0
    gens = [Poly.variable(f.varset, i, field=f.field)
            for i in range(len(f.varset))]
    cert = certify(f, gens, seed=args.seed)
    data.update(cert.as_dict())
    _emit(args, data,
          [f"rank >= {cert.lower.bound} ({label}, bounds only)"])
    return 2


def _cmd_sylvester(args):
    f, _, _ = _load_form(args)
    syl = sylvester(f)
    sq = "squarefree" if syl.squarefree_h1 else "not squarefree"
    lines = [f"h1 = {_dual_str(syl.h1)} (degree {syl.d1}, {sq})",
             f"h2 = {_dual_str(syl.h2)} (degree {syl.d2})",
             f"rank = {syl.rank}"]
    data = {"module": "families", "form": str(f), "h1": _dual_str(syl.h1),
            "h2": _dual_str(syl.h2), "d1": syl.d1, "d2": syl.d2,
            "squarefree_h1": syl.squarefree_h1, "rank": syl.rank}
    _emit(args, data, lines)
    return 0


def _cmd_strassen(args):
    f, _, _ = _load_form(args)
    report = strassen_rank(f, e=args.e, seed=args.seed)
    lines = []
    for s in report.summands:
        es = ", ".join(str(e) for e in s.e_options)
        rk = "unknown" if s.rank is None else str(s.rank)
        lines.append(f"block ({', '.join(s.block)}): "
                     f"{FAMILY_LABEL.get(s.family, s.family)}, rank {rk}, "
                     f"e options ({es})")
    if report.shared_e is not None:
        lines.append(f"shared e = {report.shared_e}")
    lines.append(f"verdict: {report.verdict}")
    if report.total_rank is not None:
        lines.append(f"total rank = {report.total_rank}")
    elif report.interval is not None:
        lo, hi = report.interval
        hi_txt = "?" if hi is None else str(hi)
        lines.append(f"interval = [{lo}, {hi_txt}]")
    for note in report.notes:
        lines.append(f"note: {note}")
    data = {"module": "strassen"}
    data.update(report.as_dict())
    _emit(args, data, lines)
    if report.verdict == "certified":
        return 0
    if report.verdict in ("conditional", "failed"):
        return 2
    return 3


def _cmd_vandermonde(args):
    res = vandermonde(args.n, solve_points=True if args.solve else None)
    data = {"module": "families"}
    data.update(res.as_dict())
    lines = [f"V_{args.n}: rank = {res.rank} ({res.status})", "hf:"]
    lines += _hf_rows(res.lower.profile.values)
    _emit(args, data, lines)
    return 0


def _cmd_split(args):
    f, _, _ = _load_form(args)
    blocks = split_disjoint(f)
    lines = []
    items = []
    for i, (comp, positions) in enumerate(blocks):
        g = restrict_to_vars(comp, positions)
        names = [f.varset.names[j] for j in positions]
        lines.append(f"block {i} ({', '.join(names)}): {g}")
        items.append({"variables": names, "form": str(g)})
    data = {"module": "poly", "form": str(f), "blocks": items}
    _emit(args, data, lines)
    return 0


def _cmd_reduce(args):
    f, _, _ = _load_form(args)
    change, reduced = essential_vars(f)
    n = len(f.varset)
    k = n - change.removed
    red = restrict_to_vars(reduced, tuple(range(k)))
    lines = [f"essential variables: {k} of {n}", f"reduced = {red}"]
    data = {"module": "bounds", "form": str(f), "essential": k,
            "removed": change.removed, "reduced": str(red)}
    _emit(args, data, lines)
    return 0


DISPATCH = {
    "perp": _cmd_perp, "gens": _cmd_gens, "hf": _cmd_hf, "cat": _cmd_cat,
    "lb": _cmd_lb, "ub": _cmd_ub, "certify": _cmd_certify,
    "rank": _cmd_rank, "sylvester": _cmd_sylvester,
    "strassen": _cmd_strassen, "vandermonde": _cmd_vandermonde,
    "split": _cmd_split, "reduce": _cmd_reduce,
}


class _Argv(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message, 0)


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--vars", help="comma-separated variable order")
    shared.add_argument("--ext", help="extension field, 'name: polynomial'")
    shared.add_argument("--degree-cap", type=int, dest="degree_cap",
                        help="truncation degree override")
    shared.add_argument("--seed", type=int, default=0,
                        help="seed for generic draws (default 0)")
    shared.add_argument("--e", type=int, help="certificate degree e")
    shared.add_argument("--json", action="store_true",
                        help="structured JSON output")

    top = _Argv(prog="apolarity",
                description="Exact Waring rank bounds and certificates "
                            "for homogeneous polynomials.")
    sub = top.add_subparsers(dest="verb")
    expr_help = "polynomial expression, or - to read stdin"
    for verb in ("perp", "gens", "hf", "cat", "rank", "sylvester",
                 "strassen", "split", "reduce"):
        p = sub.add_parser(verb, parents=[shared])
        p.add_argument("expr", help=expr_help)
    for verb in ("lb", "certify"):
        p = sub.add_parser(verb, parents=[shared])
        p.add_argument("expr", help=expr_help)
        p.add_argument("--ideal", help="semicolon-separated generators")
        p.add_argument("--t", help="contraction t in the ideal")
        if verb == "certify":
            p.add_argument("--points", help="semicolon-separated points, "
                                            "coordinates comma-separated")
    p = sub.add_parser("ub", parents=[shared])
    p.add_argument("expr", help=expr_help)
    p.add_argument("--points", help="semicolon-separated points")
    p = sub.add_parser("vandermonde", parents=[shared])
    p.add_argument("n", type=int, help="number of variables, 3 to 6")
    p.add_argument("--solve", action="store_true",
                   help="solve the permutation points exactly")
    return top


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verb is None:
            parser.print_help()
            return 1
        return DISPATCH[args.verb](args)
    except ApolarityError as err:
        name = type(err).__name__
        origin = ERROR_ORIGIN.get(name, "apolarity")
        print(f"error: {origin}.{name}: {err}", file=sys.stderr)
        return 1
    except SystemExit as ex:
        return 0 if ex.code in (0, None) else 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
