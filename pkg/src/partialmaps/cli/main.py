"""Command-line front end.

Every command builds a complete result document before printing, so error
paths never emit partial output.  Exit status: 0 success, 1 domain error,
2 usage error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import warnings

from .. import dermap, lattes, moduli
from ..errors import DegenerateMapWarning, DynamicsError, NewtonDegreeWarning
from ..fields import parse_field, scalar_str
from ..polyalg import BiForm, ProjPoint, UniPoly, discriminant, squarefree
from .. import randomgen
from .parse import PolyParseError, parse_point, parse_poly, parse_scalar, parse_scalars


class UsageError(Exception):
    pass


def _sc(x) -> str:
    return scalar_str(x)


def _poly(p: UniPoly, var: str = "x") -> dict:
    return {"str": p.to_str(var), "coeffs": [_sc(c) for c in p.coeffs], "degree": p.degree if p.coeffs else None}


def _form(F: BiForm) -> dict:
    return {"str": str(F), "coeffs": [_sc(c) for c in F.coeffs], "degree": F.d}


def _map(phi: dermap.ProjMap) -> dict:
    return {"degree": phi.degree, "P": _form(phi.P), "Q": _form(phi.Q)}


def _affine(a: dermap.AffineMap) -> dict:
    return {"str": str(a), "num": _poly(a.num), "den": _poly(a.den)}


def _pt(p: ProjPoint) -> str:
    return str(p)


def _moebius(g: moduli.Moebius) -> list[str]:
    return [_sc(v) for v in g.canonical()]


def _fixed_data(phi: dermap.ProjMap) -> dict:
    data = dermap.fixed_point_data(phi)
    rel = data.relation_sum()
    return {
        "points": [{"point": _pt(p), "multiplier": _sc(lam)} for p, lam in data.points],
        "affine_charpoly": _poly(data.charpoly, "t"),
        "relation_sum": None if rel is None else _sc(rel),
    }


def _form_arg(args, mode="homogeneous"):
    return parse_poly(args.poly, mode, args.field).parsed


def cmd_build(args):
    F = _form_arg(args)
    Fx, Fy = F.partials()
    doc = {"form": _form(F), "F_X": _form(Fx), "F_Y": _form(Fy), "squarefree": squarefree(F),
           "discriminant": _sc(discriminant(F))}
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DegenerateMapWarning)
        phi = dermap.build_phi(F)
    doc["map"] = _map(phi)
    doc["morphism"] = phi.is_morphism()
    doc["resultant"] = _sc(phi.resultant())
    doc["identity"] = phi.is_identity()
    doc["notes"] = [str(w.message) for w in caught]
    return doc


def cmd_affine(args):
    F = _form_arg(args)
    return {"form": _form(F), "d": F.d, "f": _poly(F.dehomogenize()), "affine_map": _affine(dermap.affine_form(F))}


def cmd_fixed(args):
    F = _form_arg(args)
    phi = dermap.build_phi(F)
    doc = {"form": _form(F), "map": _map(phi), "fixed_point_form": _form(dermap.fixed_point_form(phi))}
    doc.update(_fixed_data(phi))
    doc["expected_multiplier"] = _sc(args.field(1 - F.d))
    return doc


def cmd_resdisc(args):
    F = _form_arg(args)
    res, disc, ok = dermap.res_disc_check(F)
    return {"form": _form(F), "res": _sc(res), "disc": _sc(disc), "identity": ok}


def cmd_iterate(args):
    F = _form_arg(args)
    phi = dermap.iterate(dermap.build_phi(F), args.n, args.size_cap)
    return {"form": _form(F), "n": args.n, "iterate": _map(phi)}


def cmd_orbit(args):
    F = _form_arg(args)
    phi = dermap.build_phi(F)
    pt = parse_point(args.point, args.field)
    return {"form": _form(F), "orbit": [_pt(p) for p in dermap.orbit(phi, pt, args.n)]}


def cmd_psi(args):
    F = _form_arg(args)
    steps = dermap.psi_sequence(F, args.n, args.size_cap)
    phi = dermap.build_phi(F)
    rows = []
    for s in steps:
        inf = ProjPoint.infinity(args.field)
        inf_per = dermap.iterate(phi, s.n, args.size_cap)(inf) == inf
        rows.append({
            "n": s.n,
            "psi": _poly(s.psi),
            "c": _sc(s.c),
            "degree": s.psi.degree,
            "expected_degree": (F.d - 1) ** s.n + 1 - (1 if inf_per else 0),
        })
    return {"form": _form(F), "steps": rows}


def cmd_periodic(args):
    F = _form_arg(args)
    rep = dermap.periodic_report(F, args.n, args.size_cap)
    return {
        "form": _form(F),
        "period": rep.period,
        "psi": _poly(rep.psi),
        "rational_points": [{"point": _pt(p), "multiplier": _sc(lam)} for p, lam in rep.rational_points],
        "multiplier_charpoly": _poly(rep.multiplier_charpoly, "t"),
        "infinity_periodic": rep.infinity_periodic,
        "c_scalars": [_sc(c) for c in rep.c_scalars],
        "expected_degree": rep.expected_degree,
        "degree_ok": rep.degree_ok,
    }


def cmd_newton(args):
    f = _form_arg(args, "affine")
    r = parse_scalar(args.r, args.field)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", NewtonDegreeWarning)
        amap = dermap.modified_newton(f, r)
    phi = amap.to_projmap()
    doc = {"f": _poly(f), "r": _sc(r), "affine_map": _affine(amap), "map": _map(phi),
           "notes": [str(w.message) for w in caught]}
    doc.update(_fixed_data(phi))
    doc["lambda_infinity"] = None if caught else _sc(dermap.newton_infinity_multiplier(f, r))
    return doc


def cmd_reconstruct(args):
    pts = [parse_point(t, args.field) for t in args.points.split(",")]
    r = parse_scalar(args.r, args.field)
    obj, phi = dermap.reconstruct(pts, r)
    doc = {"points": [_pt(p) for p in pts], "r": _sc(r), "map": _map(phi)}
    doc["form" if isinstance(obj, BiForm) else "f"] = _form(obj) if isinstance(obj, BiForm) else _poly(obj)
    doc.update(_fixed_data(phi))
    return doc


def _gamma(args) -> moduli.Moebius:
    return moduli.Moebius(*parse_scalars(args.gamma, args.field, 4), field=args.field)


def cmd_conjugate(args):
    F = _form_arg(args)
    g = _gamma(args)
    G = moduli.conjugate_form(F, g)
    conj = moduli.conjugate_map(dermap.build_phi(F), g)
    return {"form": _form(F), "gamma": _moebius(g), "conjugated_form": _form(G), "conjugated_map": _map(conj),
            "family_closed": dermap.build_phi(G) == conj}


def cmd_normal_form(args):
    F = _form_arg(args)
    nf = moduli.normal_form(F)
    return {
        "form": _form(F),
        "moebius": _moebius(nf.moebius),
        "anchors": [_pt(p) for p in nf.anchors],
        "points": [_sc(p) for p in nf.points],
        "cross_ratio_orbits": [[_sc(v) for v in orb] for orb in nf.orbits],
        "normalized_form": _form(nf.normalized_form),
    }


def cmd_alpha(args):
    a = parse_scalar(args.value, args.field)
    F, disp = moduli.alpha_family_form(a)
    tp = moduli.two_periodic_points(a)
    psi2 = dermap.psi_sequence(F, 2, args.size_cap)[-1].psi
    prod = UniPoly.from_roots([0, 1, a], args.field)
    for q in tp.quadratics:
        prod = prod * q
    return {
        "alpha": _sc(a),
        "form": _form(F),
        "map": _map(disp),
        "map_matches_build": dermap.build_phi(F) == disp,
        "quadratics": [_poly(q) for q in tp.quadratics],
        "rational_two_periodic": [_pt(p) for p in tp.points],
        "fixed_points": [_pt(p) for p in tp.fixed_points],
        "psi2": _poly(psi2),
        "psi2_identity": prod == psi2,
    }


def cmd_pythagorean(args):
    return {"bound": args.bound, "alphas": [_sc(a) for a in moduli.pythagorean_alphas(args.bound)]}


def cmd_aut(args):
    F = _form_arg(args)
    g = _gamma(args)
    chi = moduli.invariance_check(F, g)
    return {"form": _form(F), "gamma": _moebius(g), "chi": None if chi is None else _sc(chi),
            "automorphism": moduli.is_automorphism(dermap.build_phi(F), g)}


def _curve(args) -> lattes.EllCurve:
    return lattes.EllCurve(*parse_scalars(args.curve, args.field, 3), field=args.field)


def cmd_lattes(args):
    E = _curve(args)
    if args.m < 2:
        raise UsageError("--m must be at least 2")
    psis = lattes.division_polynomials(E, args.m + 1)
    phi = lattes.lattes_map(E, args.m)
    doc = {
        "curve": str(E),
        "m": args.m,
        "j": _sc(E.j),
        "division_polynomials": [{"m": k, "even": _poly(p.even), "y_part": _poly(p.odd)}
                                 for k, p in enumerate(psis) if k >= 1],
        "lattes_map": _map(phi),
        "lattes_affine": _affine(dermap.AffineMap.from_projmap(phi)),
    }
    doc.update(_fixed_data(phi))
    if E.field.char not in (2, 3):
        amap, ok = lattes.doubling_from_torsion(E)
        doc["newton_r3"] = {"map": _affine(amap), "equals_lattes_2": ok}
    if E.field.char == 0:
        G = lattes.three_torsion_by_integration(E)
        doc["three_torsion_integral"] = {"G": _poly(G), "twelve_G_equals_psi3": G * 12 == psis[3].even}
    try:
        cm = lattes.cm_automorphism_suite(E)
    except DynamicsError as exc:
        doc["cm"] = {"note": str(exc)}
    else:
        doc["cm"] = {
            "family": cm.family,
            "skipped": cm.skipped,
            "moebius": None if cm.moebius is None else _moebius(cm.moebius),
            "results": [{"torsion": r["torsion"], "form": _form(r["form"]),
                         "chi": None if r["chi"] is None else _sc(r["chi"]),
                         "automorphism": r["automorphism"]} for r in cm.results],
        }
    return doc


def cmd_experiment(args):
    E = _curve(args)
    rep = lattes.res_disc_experiment(E, args.m)
    return {
        "curve": str(E),
        "m": rep.m,
        "disc": _sc(rep.disc),
        "res": _sc(rep.res),
        "ratio": _sc(rep.ratio),
        "sign": rep.sign,
        "numerator_factors": {str(p): e for p, e in sorted(rep.num_factors.items())},
        "denominator_factors": {str(p): e for p, e in sorted(rep.den_factors.items())},
        "primes_divide_2(m-1)(m+1)": rep.primes_divide,
    }


def _suite_euler(rng, field):
    d = rng.randint(1, 8)
    F = randomgen.random_form(rng, d, field=field)
    Fx, Fy = F.partials()
    X, Y = BiForm.X(field), BiForm.Y(field)
    return (X * Fx + Y * Fy - F.scale(d)).is_zero()


def _suite_resdisc(rng, field):
    F = randomgen.random_squarefree_form(rng, rng.randint(3, 8), field=field)
    return dermap.res_disc_check(F)[2]


def _suite_family(rng, field):
    F = randomgen.random_squarefree_form(rng, rng.randint(3, 6), field=field)
    g = randomgen.random_moebius(rng, field=field)
    return dermap.build_phi(moduli.conjugate_form(F, g)) == moduli.conjugate_map(dermap.build_phi(F), g)


def _suite_psi(rng, field):
    d = rng.randint(3, 4)
    F = randomgen.random_squarefree_form(rng, d, bound=5, field=field)
    n = rng.randint(1, 2)
    rep = dermap.periodic_report(F, n)
    return rep.degree_ok


def _suite_multipliers(rng, field):
    F = randomgen.random_squarefree_form(rng, rng.randint(3, 6), field=field)
    data = dermap.fixed_point_data(dermap.build_phi(F))
    t = UniPoly([-(field.one - F.d), 1], field)
    expected = t ** data.charpoly.degree
    rel = data.relation_sum()
    return data.charpoly == expected and (rel is None or rel == field.one)


SUITES = {
    "euler": _suite_euler,
    "resdisc": _suite_resdisc,
    "family": _suite_family,
    "psi": _suite_psi,
    "multipliers": _suite_multipliers,
}


def cmd_check(args):
    rng = random.Random(args.seed)
    fn = SUITES[args.suite]
    failures = [i for i in range(args.trials) if not fn(rng, args.field)]
    return {"suite": args.suite, "seed": args.seed, "trials": args.trials,
            "passed": args.trials - len(failures), "failed_trials": failures}


def _field_arg(text):
    try:
        return parse_field(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_arg, default=parse_field("q"), help="q or fp:<p>")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--size-cap", type=int, default=dermap.DEFAULT_SIZE_CAP)

    parser = argparse.ArgumentParser(prog="partialmaps", description="Partial-derivative maps on P^1.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, poly=True, help=None):
        p = sub.add_parser(name, parents=[common], help=help)
        if poly:
            p.add_argument("poly")
        p.set_defaults(func=fn)
        return p

    add("build", cmd_build, help="phi_F coefficients, degree, morphism check")
    add("affine", cmd_affine, help="affine form x - d f/f'")
    add("fixed", cmd_fixed, help="fixed points and multipliers")
    add("resdisc", cmd_resdisc, help="resultant/discriminant identity")
    add("iterate", cmd_iterate, help="exact n-th iterate").add_argument("--n", type=int, required=True)
    p = add("orbit", cmd_orbit, help="orbit of a point")
    p.add_argument("--point", required=True)
    p.add_argument("--n", type=int, required=True)
    add("psi", cmd_psi, help="periodic-point polynomials").add_argument("--n", type=int, required=True)
    add("periodic", cmd_periodic, help="periodic report").add_argument("--n", type=int, required=True)
    add("newton", cmd_newton, help="modified Newton map").add_argument("--r", required=True)
    p = add("reconstruct", cmd_reconstruct, poly=False, help="map from fixed points")
    p.add_argument("--points", required=True)
    p.add_argument("--r", required=True)
    add("conjugate", cmd_conjugate, help="conjugate by a Moebius map").add_argument("--gamma", required=True)
    add("normal-form", cmd_normal_form, help="normal form and cross-ratio orbit")
    add("alpha", cmd_alpha, poly=False, help="degree-4 alpha family").add_argument("--value", required=True)
    add("pythagorean", cmd_pythagorean, poly=False, help="rational alpha list").add_argument(
        "--bound", type=int, required=True)
    add("aut", cmd_aut, help="invariance character and automorphism").add_argument("--gamma", required=True)
    p = add("lattes", cmd_lattes, poly=False, help="division polynomials and Lattes maps")
    p.add_argument("--curve", required=True)
    p.add_argument("--m", type=int, required=True)
    exp = sub.add_parser("experiment", help="exploratory runs")
    exp_sub = exp.add_subparsers(dest="experiment", required=True)
    p = exp_sub.add_parser("resdisc", parents=[common], help="Lattes Res/Disc constant")
    p.add_argument("--curve", required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_experiment)
    p = add("check", cmd_check, poly=False, help="randomized property suites")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    return parser


def _flat(val) -> str:
    if isinstance(val, list):
        return "[" + ", ".join(_flat(v) for v in val) + "]"
    return str(val)


def render_text(doc, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, val in doc.items():
        if isinstance(val, dict):
            if set(val) >= {"str", "coeffs"}:
                lines.append(f"{pad}{key}: {val['str']}")
            else:
                lines.append(f"{pad}{key}:")
                lines.extend(render_text(val, indent + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict) and set(val[0]) >= {"str", "coeffs"}:
            lines.append(f"{pad}{key}: [{', '.join(v['str'] for v in val)}]")
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                sub = render_text(item, indent + 2)
                sub[0] = "  " * (indent + 1) + "- " + sub[0].lstrip()
                lines.extend(sub)
        elif isinstance(val, list):
            lines.append(f"{pad}{key}: {_flat(val)}")
        else:
            lines.append(f"{pad}{key}: {val}")
    return lines


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    name = args.command if args.command != "experiment" else f"experiment {args.experiment}"
    try:
        doc = args.func(args)
    except (PolyParseError, UsageError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DynamicsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    doc = {"command": name, "field": repr(args.field), **doc}
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("\n".join(render_text(doc)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
