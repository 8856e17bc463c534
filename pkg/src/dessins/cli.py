"""Command line front end.

Exit status: 0 when the computation or check succeeds, 1 when a verification
fails, 2 on bad input.  Errors print one line ``error[<code>]: <message>``.
"""

import argparse
import json
import sys
from fractions import Fraction

from .arith.bivar import format_bivar
from .arith.parse import parse_ratfunc
from .arith.quadext import QuadExt, format_scalar
from .belyi.belyi import is_belyi, ram_profile, ramification_total, verify_identity
from .dessin.export import export_dot
from .dessin.passport import (diagnostics, passport_from_construction1,
                              passport_from_construction2)
from .errors import DessinsError
from .isogeny.curves import PRESETS, preset, verify_isogeny
from .isogeny.wp import DEFAULT_SAMPLES, verify_wp_identity
from .modeq import modeq
from .psl2.cosets import GAMMA1, GAMMA2, coset_table
from .psl2.cusps import cusp_classes, elliptic_counts, genus_formula
from .psl2.subgroups import parse_spec

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(DessinsError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _scalar_json(c):
    if isinstance(c, QuadExt):
        return format_scalar(c)
    if isinstance(c, Fraction):
        return str(c) if c.denominator != 1 else c.numerator
    return c


def _cusp_list(classes):
    return "[" + ",".join(f"({c},{w})" for c, w in classes) + "]"


# ---------------------------------------------------------------------------
# subcommands; each returns (exit code, text, json payload)

def cmd_subgroup_info(args):
    spec = parse_spec(args.spec)
    t = coset_table(spec)
    nu2, nu3 = elliptic_counts(t)
    classes = cusp_classes(t)
    g = genus_formula(t.m, nu2, nu3, len(classes))
    text = f"index={t.m} genus={g} nu2={nu2} nu3={nu3} cusps={_cusp_list(classes)}"
    data = {"spec": spec.text(), "index": t.m, "genus": int(g), "nu2": nu2, "nu3": nu3,
            "cusps": [[str(c), w] for c, w in classes]}
    return EXIT_OK, text, data


def _table_for(args):
    spec = parse_spec(args.spec)
    return coset_table(spec, GAMMA1 if args.construction == 1 else GAMMA2)


def cmd_dessin_passport(args):
    t = _table_for(args)
    if args.construction == 1:
        pp = passport_from_construction1(t)
        tr = None
    else:
        pp, tr = passport_from_construction2(t)
    lines = [pp.text()]
    data = {"spec": t.spec.text(), "construction": args.construction, "passport": pp.as_dict()}
    if args.diagnostics:
        from .dessin.passport import triple_from_table
        d = diagnostics(tr or triple_from_table(t))
        data["diagnostics"] = d.as_dict()
        lines.append(" ".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}"
                              for k, v in d.as_dict().items()))
    return EXIT_OK, "\n".join(lines), data


def cmd_dessin_dot(args):
    t = _table_for(args)
    dot = export_dot(t)
    return EXIT_OK, dot.rstrip("\n"), {"dot": dot}


def cmd_belyi_verify(args):
    f = parse_ratfunc(args.f)
    prof = ram_profile(f)
    ok = is_belyi(f)
    text = f"belyi={'true' if ok else 'false'} {prof.text()} ramification={ramification_total(prof)}"
    data = {"belyi": ok, "degree": prof.degree, "over0": list(prof.over0),
            "over1": list(prof.over1), "overinf": list(prof.overinf),
            "ramification": ramification_total(prof)}
    if args.equals is not None:
        same = verify_identity(f, parse_ratfunc(args.equals))
        text += f"\nidentity={'true' if same else 'false'}"
        data["identity"] = same
        ok = ok and same
    return (EXIT_OK if ok else EXIT_FAIL), text, data


def _level_or_pair(args):
    if args.level is not None:
        if args.f or args.g:
            raise UsageError("--level cannot be combined with --f/--g")
        f, g = modeq.level_pair(args.level)
        return f, g
    if not (args.f and args.g):
        raise UsageError("give --level or both --f and --g")
    return parse_ratfunc(args.f), parse_ratfunc(args.g)


def cmd_modeq(args):
    f, g = _level_or_pair(args)
    scale = Fraction(args.scale)
    mp = modeq.modular_polynomial(f, g, scale, level=args.level)
    sub = modeq.substitution_check(mp, f, g, scale)
    lines = [format_bivar(mp.phi)]
    data = {"phi": format_bivar(mp.phi), "bidegree": list(mp.bidegree),
            "symmetric": mp.symmetric, "substitution": sub}
    ok = sub
    if args.check_symmetric_route:
        r = modeq.symmetric_route(f, g, Fraction(args.shift), scale, phi=mp.phi)
        lines += [f"p={r.p}", f"q={r.q}",
                  f"route={'match' if r.matches else 'mismatch'} ratio={r.ratio}"]
        data["route"] = {"p": str(r.p), "q": str(r.q), "matches": r.matches,
                         "ratio": str(r.ratio) if r.ratio is not None else None}
        ok = ok and r.matches
    return (EXIT_OK if ok else EXIT_FAIL), "\n".join(lines), data


def cmd_jvalues(args):
    rows = modeq.special_values_level(args.level)
    lines, data, ok = [], [], True
    for r in rows:
        if r.error:
            lines.append(f"{r.label} error={r.error}")
            ok = False
            data.append({"label": r.label, "error": r.error})
            continue
        val = format_scalar(r.value)
        lines.append(f"{r.label} z={format_scalar(r.point)} j({r.j_of})={val} = {r.factored}")
        ok = ok and bool(r.factored_ok)
        data.append({"label": r.label, "z": format_scalar(r.point), "j_of": r.j_of,
                     "value": val, "factored": r.factored, "factored_ok": r.factored_ok})
    return (EXIT_OK if ok else EXIT_FAIL), "\n".join(lines), {"level": args.level, "values": data}


def cmd_isogeny_verify(args):
    curve, m = preset(args.preset)
    if args.flip:
        m = m.flipped()
    res = verify_isogeny(curve, curve, m)
    text = f"isogeny={'true' if res.ok else 'false'} degree={res.degree} curve={curve.text()}"
    return (EXIT_OK if res.ok else EXIT_FAIL), text, {
        "preset": args.preset, "ok": res.ok, "degree": res.degree, "flipped": args.flip}


def cmd_wp_check(args):
    rep = verify_wp_identity(args.which, DEFAULT_SAMPLES, args.tol, args.perturb)
    text = (f"identity={'true' if rep.passed else 'false'} max_error={rep.max_error:.3e} "
            f"skipped={rep.skipped} assignment={rep.assignment}")
    data = {"which": rep.which, "passed": rep.passed, "max_error": rep.max_error,
            "skipped": rep.skipped, "assignment": rep.assignment}
    return (EXIT_OK if rep.passed else EXIT_FAIL), text, data


# ---------------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="dessins", description="Dessins, Belyi maps and modular equations.")
    p.add_argument("--json", action="store_true", help="emit a JSON document")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sg = sub.add_parser("subgroup").add_subparsers(dest="action", required=True, parser_class=_Parser)
    info = sg.add_parser("info", help="index, genus, elliptic points and cusps")
    info.add_argument("spec")
    info.set_defaults(func=cmd_subgroup_info)

    ds = sub.add_parser("dessin").add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, func in (("passport", cmd_dessin_passport), ("dot", cmd_dessin_dot)):
        q = ds.add_parser(name)
        q.add_argument("spec")
        q.add_argument("--construction", type=int, choices=(1, 2), default=1)
        if name == "passport":
            q.add_argument("--diagnostics", action="store_true")
        q.set_defaults(func=func)

    bv = sub.add_parser("belyi").add_subparsers(dest="action", required=True, parser_class=_Parser)
    v = bv.add_parser("verify")
    v.add_argument("--f", required=True)
    v.add_argument("--equals", help="also check f equals this expression")
    v.set_defaults(func=cmd_belyi_verify)

    me = sub.add_parser("modeq")
    me.add_argument("--level", type=int, choices=sorted(modeq.LEVEL_PAIRS))
    me.add_argument("--f")
    me.add_argument("--g")
    me.add_argument("--scale", default="1728")
    me.add_argument("--check-symmetric-route", action="store_true")
    me.add_argument("--shift", default="1")
    me.set_defaults(func=cmd_modeq)

    jv = sub.add_parser("jvalues")
    jv.add_argument("--level", type=int, required=True, choices=sorted(modeq.SPECIAL_POINTS))
    jv.set_defaults(func=cmd_jvalues)

    iso = sub.add_parser("isogeny").add_subparsers(dest="action", required=True, parser_class=_Parser)
    iv = iso.add_parser("verify")
    iv.add_argument("preset", choices=sorted(PRESETS))
    iv.add_argument("--flip", action="store_true", help="negate g")
    iv.set_defaults(func=cmd_isogeny_verify)

    wp = sub.add_parser("wp").add_subparsers(dest="action", required=True, parser_class=_Parser)
    wc = wp.add_parser("check")
    wc.add_argument("which", choices=("hexagonal", "square"))
    wc.add_argument("--tol", type=float, default=1e-6)
    wc.add_argument("--perturb", action="store_true")
    wc.set_defaults(func=cmd_wp_check)
    return p


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        code, text, data = args.func(args)
    except (DessinsError, ValueError, ZeroDivisionError) as exc:
        c = getattr(exc, "code", "input")
        if want_json:
            print(json.dumps({"error": c, "message": str(exc)}, sort_keys=True), file=out)
        print(f"error[{c}]: {exc}", file=err)
        return EXIT_INPUT
    if args.json:
        print(json.dumps(data, sort_keys=True, default=_scalar_json), file=out)
    else:
        print(text, file=out)
    return code


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
