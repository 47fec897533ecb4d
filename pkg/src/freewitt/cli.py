"""Command-line front end: every operation over JSON files and stdout.

Exit codes: 0 success, 2 domain error (the error class name is reported on
stderr), 1 I/O or parse error.  Output is deterministic: keys sorted, term
lists canonically ordered, rationals as "p/q" strings, no timestamps.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import faber, fock, formal_group as fg, freeprob as fp, genus as gn, jsonio, witt
from .errors import DomainError
from .selftest import run_selftest
from .series import TruncSeries, comp_inverse, compose, exp_zero, log_unit, series_arith, z_dlog, z_dlog_inv


def _load(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _ParseError(str(exc))


class _ParseError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=1))
    sys.stdout.write("\n")


def _series(path, order=None) -> TruncSeries:
    f = jsonio.series_from_json(_load(path))
    if order is not None and order < f.order:
        f = f.truncate(order)
    return f


# -- verb implementations -------------------------------------------------------


def _cmd_series(args) -> None:
    verb = args.verb
    if verb in ("mul", "div", "compose"):
        a = _series(args.inputs[0], args.order)
        b = _series(args.inputs[1], args.order)
        if verb == "compose":
            out = compose(a, b)
        else:
            out = series_arith(a, b, verb)
    else:
        a = _series(args.inputs[0], args.order)
        out = {
            "invert": comp_inverse,
            "log": log_unit,
            "exp": exp_zero,
            "zdlog": z_dlog,
            "zdloginv": z_dlog_inv,
        }[verb](a)
    _emit(jsonio.series_to_json(out))


def _cmd_fgl(args) -> None:
    if args.verb == "fromlog":
        logf = _series(args.inputs[0])
        degree = args.degree if args.degree is not None else logf.order
        _emit(jsonio.fgl_to_json(fg.fgl_from_log(logf, degree)))
    elif args.verb == "check":
        _emit(fg.fgl_check_axioms(jsonio.fgl_from_json(_load(args.inputs[0]))))
    elif args.verb == "inverse":
        _emit(jsonio.series_to_json(
            fg.fgl_formal_inverse(jsonio.fgl_from_json(_load(args.inputs[0])))))
    elif args.verb == "ishom":
        f = _series(args.inputs[0])
        F = jsonio.fgl_from_json(_load(args.inputs[1]))
        G = jsonio.fgl_from_json(_load(args.inputs[2]))
        _emit({"is_homomorphism": fg.fgl_is_hom(f, F, G)})
    elif args.verb == "expder":
        v = fg.Derivation(_series(args.inputs[0]))
        order = args.order if args.order is not None else v.coeff_series.order
        _emit(jsonio.series_to_json(fg.exp_derivation(v, order)))


def _cmd_witt(args) -> None:
    verb = args.verb

    def vec(path, kind):
        v = jsonio.vector_from_json(_load(path), kind)
        if args.len is not None and args.len < len(v.comps):
            v = type(v)(v.comps[: args.len])
        return v

    if verb in ("add", "mul"):
        a = vec(args.inputs[0], "witt")
        b = vec(args.inputs[1], "witt")
        _emit(jsonio.vector_to_json(witt.witt_ring_op(a, b, verb)))
    elif verb == "ghost":
        if args.inverse:
            _emit(jsonio.vector_to_json(witt.ghost_inv(vec(args.inputs[0], "ghost"))))
        else:
            _emit(jsonio.vector_to_json(witt.witt_to_ghost(vec(args.inputs[0], "witt"))))
    elif verb == "gamma":
        if args.inverse:
            f = jsonio.lambda_from_json(_load(args.inputs[0]))
            _emit(jsonio.vector_to_json(witt.lambda_to_witt(f)))
        else:
            _emit(jsonio.lambda_to_json(witt.witt_to_lambda(vec(args.inputs[0], "witt"))))
    elif verb == "necklace":
        _emit(jsonio.vector_to_json(witt.witt_to_necklace(vec(args.inputs[0], "witt"))))
    elif verb == "vr":
        alpha = vec(args.inputs[0], "necklace")
        _emit(jsonio.vector_to_json(witt.verschiebung(args.r, alpha)))
    elif verb == "fr":
        alpha = vec(args.inputs[0], "necklace")
        _emit(jsonio.vector_to_json(witt.frobenius(args.r, alpha)))
    elif verb == "diagram":
        _emit(witt.check_diagram(vec(args.inputs[0], "witt")))


def _cmd_faber(args) -> None:
    if args.verb == "poly":
        b = [jsonio.frac_from_str(s) for s in _load(args.inputs[0])["b"]]
        n = args.n if args.n is not None else len(b)
        polys = faber.faber_recursion(b, n)
        values = faber.faber_from_generating(b, n)
        dets = [faber.faber_det(b, m) for m in range(n + 1)]
        if [p.at_zero() for p in polys] != values or any(
            p.coeffs != d.coeffs for p, d in zip(polys, dets)
        ):
            raise AssertionError("Faber routes disagree")
        _emit({
            "polys": [jsonio.faberpoly_to_json(p) for p in polys],
            "values_at_zero": [jsonio.frac_to_str(v) for v in values],
        })
    elif args.verb == "grunsky":
        b = [jsonio.frac_from_str(s) for s in _load(args.inputs[0])["b"]]
        M = args.m if args.m is not None else len(b)
        table = faber.grunsky_coeffs(b, M)
        _emit(jsonio.grunsky_to_json(table))
    elif args.verb == "adams":
        n = args.n or 6
        _emit({
            "psi": [jsonio.multipoly_to_json(faber.adams_poly(m)) for m in range(1, n + 1)],
            "sign_identity_holds": faber.check_adams_lemma(n),
        })


def _cmd_freeprob(args) -> None:
    verb = args.verb
    order = args.order
    if verb == "moments":
        k = jsonio.cumulants_from_json(_load(args.inputs[0]))
        _emit(jsonio.distribution_to_json(fp.moments_from_cumulants(k)))
    elif verb == "cumulants":
        mu = jsonio.distribution_from_json(_load(args.inputs[0]))
        _emit(jsonio.cumulants_to_json(fp.cumulants_from_moments(mu)))
    elif verb == "rtransform":
        mu = jsonio.distribution_from_json(_load(args.inputs[0]))
        _emit(jsonio.series_to_json(fp.r_transform(mu)))
    elif verb == "stransform":
        mu = jsonio.distribution_from_json(_load(args.inputs[0]))
        _emit(jsonio.series_to_json(fp.s_transform(mu)))
    elif verb in ("boxplus", "boxtimes", "circledast", "boxdot"):
        mu = jsonio.distribution_from_json(_load(args.inputs[0]))
        nu = jsonio.distribution_from_json(_load(args.inputs[1]))
        if order is not None:
            mu, nu = mu.truncate(order), nu.truncate(order)
        op = {"boxplus": fp.boxplus, "boxtimes": fp.boxtimes,
              "circledast": fp.circledast, "boxdot": fp.boxdot}[verb]
        _emit(jsonio.distribution_to_json(op(mu, nu)))
    elif verb == "log":
        mu = jsonio.distribution_from_json(_load(args.inputs[0]))
        _emit(jsonio.distribution_to_json(fp.dist_log(mu)))
    elif verb == "exp":
        mu = jsonio.distribution_from_json(_load(args.inputs[0]))
        _emit(jsonio.distribution_to_json(fp.dist_exp(mu)))
    elif verb == "nctransform":
        f = _series(args.inputs[0], order)
        _emit(jsonio.series_to_json(fp.mult_fn_transform(f)))


def _cmd_fock(args) -> None:
    order = args.order or 6
    if args.verb == "moments":
        f = _series(args.f)
        if args.form == "additive":
            el = fock.canonical_T(list(f.coeffs), order)
        else:
            el = fock.haagerup_op(f, order)
        _emit({
            "element": jsonio.opelement_to_json(el),
            "moments": jsonio.distribution_to_json(fock.vacuum_moments(el, order)),
        })
    elif args.verb == "freeness":
        f = _series(args.f)
        g = _series(args.g)
        _emit(fock.freeness_witness(f, g, order))
    elif args.verb == "genusop":
        q = _series(args.q)
        el = fock.genus_operator(q, order)
        _emit({
            "element": jsonio.opelement_to_json(el),
            "moments": jsonio.distribution_to_json(fock.vacuum_moments(el, order)),
        })


def _cmd_genus(args) -> None:
    verb = args.verb
    if verb in ("fromvalues", "from-values"):
        g = jsonio.genus_from_json(_load(args.inputs[0]))
        _emit({
            "genus": jsonio.genus_to_json(g),
            "log": jsonio.series_to_json(gn.log_from_genus(g)),
            "q": jsonio.series_to_json(gn.q_from_genus(g).q),
        })
    elif verb in ("fromlog", "from-log"):
        l = _series(args.inputs[0])
        _emit(jsonio.genus_to_json(gn.genus_from_log(l)))
    elif verb == "q":
        g = _genus_arg(args)
        _emit(jsonio.series_to_json(gn.q_from_genus(g).q))
    elif verb == "ksequence":
        g = _genus_arg(args)
        D = args.upto or 4
        ms = gn.msequence_from_q(gn.q_from_genus(g), D)
        _emit(jsonio.msequence_to_json(ms))
    elif verb in ("checkmult", "check-mult"):
        g = _genus_arg(args)
        D = args.upto or 4
        ms = gn.msequence_from_q(gn.q_from_genus(g), D)
        _emit(gn.msequence_multiplicativity_check(ms, D))
    elif verb == "fock":
        g = _genus_arg(args)
        order = args.order or 6
        q = gn.q_from_genus(g).q.truncate(order)
        el = fock.genus_operator(q, order)
        _emit({
            "element": jsonio.opelement_to_json(el),
            "moments": jsonio.distribution_to_json(fock.vacuum_moments(el, order)),
        })
    elif verb == "add-lambda":
        g1 = jsonio.genus_from_json(_load(args.inputs[0]))
        g2 = jsonio.genus_from_json(_load(args.inputs[1]))
        _emit(jsonio.genus_to_json(gn.genus_add_lambda(g1, g2)))
    elif verb == "compose-log":
        g1 = jsonio.genus_from_json(_load(args.inputs[0]))
        g2 = jsonio.genus_from_json(_load(args.inputs[1]))
        _emit(jsonio.genus_to_json(gn.genus_compose_log(g1, g2)))


def _genus_arg(args) -> gn.Genus:
    if args.name:
        return gn.named_genus(args.name, args.len or 11)
    if not args.inputs:
        raise _ParseError("need --name or a genus JSON file")
    return jsonio.genus_from_json(_load(args.inputs[0]))


def _cmd_selftest(args) -> int:
    ok, table = run_selftest(args.order or 8, args.seed if args.seed is not None else 42)
    sys.stdout.write(table + "\n")
    return 0 if ok else 2


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="freewitt",
        description="Exact computer algebra for Witt vectors, free probability and genera.",
    )
    sub = p.add_subparsers(dest="group", required=True)

    def leaf(group, verbs, fn, ninputs=1, extra=()):
        gp = sub.add_parser(group)
        gs = gp.add_subparsers(dest="verb", required=True)
        for verb in verbs:
            vp = gs.add_parser(verb)
            vp.add_argument("inputs", nargs="*", help="JSON input files ('-' for stdin)")
            vp.add_argument("--order", type=int, default=None)
            for name, kw in extra:
                vp.add_argument(name, **kw)
            vp.set_defaults(func=fn)
        return gs

    leaf("series", ["mul", "div", "compose", "invert", "log", "exp", "zdlog", "zdloginv"],
         _cmd_series)
    leaf("fgl", ["fromlog", "check", "inverse", "ishom", "expder"], _cmd_fgl,
         extra=[("--degree", {"type": int, "default": None})])
    leaf("witt", ["add", "mul", "ghost", "gamma", "necklace", "vr", "fr", "diagram"],
         _cmd_witt,
         extra=[("--r", {"type": int, "default": 2}),
                ("--len", {"type": int, "default": None}),
                ("--inverse", {"action": "store_true"})])
    leaf("faber", ["poly", "grunsky", "adams"], _cmd_faber,
         extra=[("--n", {"type": int, "default": None}),
                ("--m", {"type": int, "default": None})])
    leaf("freeprob",
         ["moments", "cumulants", "rtransform", "stransform", "boxplus", "boxtimes",
          "circledast", "boxdot", "log", "exp", "nctransform"],
         _cmd_freeprob)

    fockp = sub.add_parser("fock")
    fsub = fockp.add_subparsers(dest="verb", required=True)
    fm = fsub.add_parser("moments")
    fm.add_argument("--f", required=True, help="series JSON file")
    fm.add_argument("--form", choices=["additive", "haagerup"], default="additive")
    fm.add_argument("--order", type=int, default=6)
    fm.set_defaults(func=_cmd_fock)
    ff = fsub.add_parser("freeness")
    ff.add_argument("--f", required=True)
    ff.add_argument("--g", required=True)
    ff.add_argument("--order", type=int, default=6)
    ff.set_defaults(func=_cmd_fock)
    fg_ = fsub.add_parser("genusop")
    fg_.add_argument("--q", required=True, help="characteristic series JSON file")
    fg_.add_argument("--order", type=int, default=6)
    fg_.set_defaults(func=_cmd_fock)

    leaf("genus",
         ["fromvalues", "from-values", "fromlog", "from-log", "q", "ksequence",
          "checkmult", "check-mult", "fock", "add-lambda", "compose-log"],
         _cmd_genus,
         extra=[("--name", {"choices": ["trivial", "todd", "L"], "default": None}),
                ("--len", {"type": int, "default": None}),
                ("--upto", {"type": int, "default": None})])

    st = sub.add_parser("selftest")
    st.add_argument("--order", type=int, default=8)
    st.add_argument("--seed", type=int, default=42)
    st.set_defaults(func=_cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        result = args.func(args)
        return result if isinstance(result, int) else 0
    except DomainError as exc:
        sys.stderr.write("error: %s: %s\n" % (exc.name, exc))
        return 2
    except _ParseError as exc:
        sys.stderr.write("parse error: %s\n" % exc)
        return 1
    except (KeyError, ValueError, TypeError, IndexError) as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
