"""Command-line front end.

Subcommands::

    gamma  --p P --prec N --x NUM/DEN
    eval-g --p P --r R --prec N --upper 1/6,1/2,5/6 --lower 0,1/4,3/4 --t C0[,C1,...]
    count  --p P --r R --d D --a C0[,..] --b C0[,..] --shape linear|subleading
           [--predict] [--prec N]
    gauss  --p P --r R --mode complex|padic [--a A] [--tol T] [--piprec M]
    verify --suite NAME --p P [--r R] [--d D] [--prec N]
           [--grid exhaustive|sample:K] [--seed S] [--json PATH]

Field elements are written as comma-separated prime-field coefficients
c_0,c_1,...,c_{r-1} (constant term first).  Exit status: 0 when everything
checked passed, 1 on any failed check, 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .counts import CurveFamily, count_curve_points, predicted_curve_points
from .errors import InvalidFieldError, NotPIntegralError, UnsupportedConfigurationError
from .ff import build_field
from .gammap import build_gamma_table, gamma_p
from .gauss import check_davenport_hasse, check_gauss_lemmas, check_gross_koblitz
from .harness import SUITES, SuiteConfig, run_suite
from .hyper import hyper_sum


def _fraction(text: str) -> Fraction:
    return Fraction(text)


def _fraction_list(text: str) -> list[Fraction]:
    return [Fraction(part) for part in text.split(",")]


def _element(field, text: str):
    coeffs = [int(part) for part in text.split(",")]
    return field.elem(coeffs)


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="padichyper", description=__doc__,
                                  formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = top.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gamma", help="p-adic gamma at a rational argument")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--prec", type=int, required=True)
    g.add_argument("--x", type=_fraction, required=True)

    e = sub.add_parser("eval-g", help="evaluate the hypergeometric sum")
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--r", type=int, default=1)
    e.add_argument("--prec", type=int, required=True)
    e.add_argument("--upper", type=_fraction_list, required=True)
    e.add_argument("--lower", type=_fraction_list, required=True)
    e.add_argument("--t", required=True, help="element literal c_0[,c_1,...]")

    c = sub.add_parser("count", help="curve point counts, brute force and closed form")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--r", type=int, default=1)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--a", required=True)
    c.add_argument("--b", required=True)
    c.add_argument("--shape", choices=("linear", "subleading"), required=True)
    c.add_argument("--predict", action="store_true")
    c.add_argument("--prec", type=int, default=4)

    ga = sub.add_parser("gauss", help="Gauss-sum oracles")
    ga.add_argument("--p", type=int, required=True)
    ga.add_argument("--r", type=int, default=1)
    ga.add_argument("--mode", choices=("complex", "padic"), required=True)
    ga.add_argument("--a", type=int, default=None, help="character index (padic mode)")
    ga.add_argument("--tol", type=float, default=1e-8)
    ga.add_argument("--piprec", type=int, default=12)

    v = sub.add_parser("verify", help="run one identity suite and report")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--r", type=int, default=1)
    v.add_argument("--d", type=int, default=None)
    v.add_argument("--prec", type=int, default=4)
    v.add_argument("--grid", default="exhaustive")
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--tol", type=float, default=1e-8)
    v.add_argument("--piprec", type=int, default=12)
    v.add_argument("--json", dest="json_path", default=None)
    return top


def _cmd_gamma(args) -> int:
    table = build_gamma_table(args.p, args.prec)
    print(gamma_p(table, args.x).to_text())
    return 0


def _cmd_eval_g(args) -> int:
    field = build_field(args.p, args.r)
    t = _element(field, args.t)
    hv = hyper_sum(field, args.upper, args.lower, t, args.prec)
    print(hv.value.to_text())
    print(f"guaranteed absolute precision: {hv.guaranteed_prec}")
    return 0


def _cmd_count(args) -> int:
    field = build_field(args.p, args.r)
    fam = CurveFamily(args.d, _element(field, args.a), _element(field, args.b),
                      args.shape)
    truth = count_curve_points(field, fam)
    print(f"points: {truth}")
    if args.predict:
        pred = predicted_curve_points(field, fam, args.prec)
        print(f"predicted: {pred.to_text()}")
        agree = pred.eq_at(pred.ctx.integer(truth), args.prec)
        print(f"agree mod {args.p}^{args.prec}: {agree}")
        return 0 if agree else 1
    return 0


def _cmd_gauss(args) -> int:
    field = build_field(args.p, args.r)
    if args.mode == "complex":
        report = check_gauss_lemmas(field, args.tol)
        for key, value in report.items():
            print(f"{key}: {value}")
        ok = report["ok"]
        for k in (2, 3):
            if (field.q - 1) % k == 0:
                dh = all(check_davenport_hasse(field, k, psi, args.tol)
                         for psi in range(field.q - 1))
                print(f"davenport_hasse_k{k}: {dh}")
                ok = ok and dh
        return 0 if ok else 1
    indices = [args.a] if args.a is not None else range(field.q - 1)
    ok = True
    for a in indices:
        good = check_gross_koblitz(field, a, args.piprec)
        print(f"a={a}: {'ok' if good else 'FAIL'}")
        ok = ok and good
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    config = SuiteConfig(suite=args.suite, p=args.p, r=args.r, d=args.d,
                         prec=args.prec, grid=args.grid, seed=args.seed,
                         tol=args.tol, pi_prec=args.piprec,
                         json_path=args.json_path)
    report = run_suite(config)
    print(f"suite={args.suite} passed={report.passed} failed={report.failed} "
          f"skipped={report.skipped} wallMillis={report.wall_millis}")
    if args.json_path:
        print(f"report written to {args.json_path}")
    return 0 if report.ok else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"gamma": _cmd_gamma, "eval-g": _cmd_eval_g, "count": _cmd_count,
                "gauss": _cmd_gauss, "verify": _cmd_verify}
    try:
        return handlers[args.command](args)
    except (InvalidFieldError, NotPIntegralError, UnsupportedConfigurationError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
