"""Suite runner: sweeps parameter grids, checks each identity as an exact
congruence (or toleranced complex identity) and emits machine-readable reports.

A report is a single JSON document (schemaVersion 1) whose cases list one
checked instance each, with both sides rendered in the canonical value
grammar of the padic module (plain integers for the floor identities,
deviation/tolerance text for the complex oracle).  Reports are deterministic
for a fixed config and seed, modulo the wallMillis field.

Sampled grids use an explicit 64-bit linear congruential generator,

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64,

drawing the top 31 bits of each new state; a sampled pair is
(1 + draw mod (q-1), 1 + draw mod (q-1)) as element codes, duplicates
allowed.  The constants are part of the report contract so independent
implementations can reproduce a sampled run bit for bit.

Suite cases are mutually independent and may be executed in any order, but
results are always aggregated in sweep order for deterministic output.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .counts import (
    CurveFamily,
    count_curve_points,
    count_power_solutions,
    count_trinomial_roots,
    floor_identity_even,
    floor_identity_odd,
    floor_identity_odd_doubled,
    hyper_argument,
    predicted_curve_points,
    predicted_root_count,
)
from .errors import UnsupportedConfigurationError
from .ff import FiniteField, build_field
from .gammap import build_gamma_table, functional_equation_case
from .gauss import check_davenport_hasse, check_gauss_lemmas, gross_koblitz_sides
from .hyper import (
    HyperParams,
    canonical,
    even_main_params,
    even_reduced_params,
    hyper_evaluator,
    odd_main_params,
    odd_primed_reduced_params,
    odd_reduced_params,
)
SUITES = ("floors", "gamma-lemmas", "gfun-props", "sum-even", "sum-odd",
          "transform-2g2", "counts", "roots", "specials", "gauss-complex",
          "gross-koblitz")

DEFAULT_SEED = 1
_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_M64 = (1 << 64) - 1


class Lcg:
    """The documented sampling generator; see module docstring."""

    def __init__(self, seed: int):
        self.state = seed & _M64

    def draw(self) -> int:
        self.state = (_LCG_MULT * self.state + _LCG_INC) & _M64
        return self.state >> 33


def grid_pairs(field: FiniteField, grid: str, seed: int):
    """Pairs (a, b) of nonzero elements: the full square or an LCG sample."""
    q = field.q
    if grid == "exhaustive":
        return [(field.from_code(a), field.from_code(b))
                for a in range(1, q) for b in range(1, q)]
    if grid.startswith("sample:"):
        count = int(grid.split(":", 1)[1])
        rng = Lcg(seed)
        out = []
        for _ in range(count):
            a = 1 + rng.draw() % (q - 1)
            b = 1 + rng.draw() % (q - 1)
            out.append((field.from_code(a), field.from_code(b)))
        return out
    raise ValueError(f"unknown grid spec {grid!r}")


# ---------------------------------------------------------------------------

@dataclass
class SuiteConfig:
    suite: str
    p: int
    r: int = 1
    d: int | None = None
    prec: int = 4
    grid: str = "exhaustive"
    seed: int = DEFAULT_SEED
    tol: float = 1e-8
    pi_prec: int = 12
    json_path: str | None = None


@dataclass
class Report:
    header: dict
    cases: list = dc_field(default_factory=list)
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    wall_millis: int = 0

    def to_dict(self) -> dict:
        return {
            "schemaVersion": 1,
            "header": self.header,
            "cases": self.cases,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "wallMillis": self.wall_millis,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def write(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json() + "\n")

    @property
    def ok(self) -> bool:
        return self.failed == 0


class _Recorder:
    def __init__(self, suite: str, field: FiniteField, prec: int, n_work: int,
                 seed: int, grid: str):
        self.t0 = time.monotonic()
        header = {"suite": suite, **field.serialize(), "N_req": prec,
                  "N_work": n_work, "grid": grid, "seed": seed}
        self.report = Report(header=header)

    def case(self, params: dict, lhs: str, rhs: str, equal: bool):
        self.report.cases.append(
            {"params": params, "lhsText": lhs, "rhsText": rhs, "equal": bool(equal)})
        if equal:
            self.report.passed += 1
        else:
            self.report.failed += 1

    def skip(self, params: dict, reason: str):
        self.report.cases.append({"params": params, "skipped": reason})
        self.report.skipped += 1

    def done(self) -> Report:
        self.report.wall_millis = int((time.monotonic() - self.t0) * 1000)
        return self.report


def _require(cond: bool, msg: str):
    if not cond:
        raise UnsupportedConfigurationError(msg)


# ---------------------------------------------------------------------------
# individual suites

def run_floors(field: FiniteField, d: int, prec: int = 4) -> Report:
    """All floor identities at every admissible (m, i) for one (field, d)."""
    p, r, q = field.p, field.r, field.q
    _require(d >= 3, "d must be at least 3")
    _require(d * (d - 1) % p, f"p={p} divides d(d-1)")
    rec = _Recorder("floors", field, prec, 0, 0, "exhaustive")
    half = (q - 1) // 2
    for i in range(r):
        if d % 2 == 0:
            for m in range(1, q - 1):
                if m == half:
                    continue
                lhs, rhs = floor_identity_even(p, r, d, m, i)
                rec.case({"lemma": "even", "d": d, "m": m, "i": i},
                         str(lhs), str(rhs), lhs == rhs)
        else:
            for m in range(1, q - 1):
                lhs, rhs = floor_identity_odd(p, r, d, m, i)
                rec.case({"lemma": "odd", "d": d, "m": m, "i": i},
                         str(lhs), str(rhs), lhs == rhs)
            for m in range(0, q - 1):
                if m == half:
                    continue
                lhs, rhs = floor_identity_odd_doubled(p, r, d, m, i)
                rec.case({"lemma": "odd-doubled", "d": d, "m": m, "i": i},
                         str(lhs), str(rhs), lhs == rhs)
    return rec.done()


def run_gamma_lemmas(p: int, prec: int = 4) -> Report:
    """Reflection formula gamma(x) gamma(1-x) = (-1)^x0, all residues mod p^prec."""
    field = build_field(p, 1)
    rec = _Recorder("gamma-lemmas", field, prec, prec, 0, "exhaustive")
    table = build_gamma_table(p, prec)
    for x in range(p ** prec):
        lhs, rhs = functional_equation_case(table, x)
        rec.case({"x": x}, str(lhs), str(rhs), lhs == rhs)
    return rec.done()


def run_gfun_props(field: FiniteField, prec: int = 4) -> Report:
    """Normal-form invariance, valuation bound and model independence."""
    p, r, q = field.p, field.r, field.q
    params = HyperParams((Fraction(7, 6), Fraction(1, 2)),
                         (Fraction(3, 4), Fraction(0)))
    canon = canonical(params)
    swapped = HyperParams(tuple(reversed(canon.upper)), tuple(reversed(canon.lower)))
    ev_raw = hyper_evaluator(field, params, prec)
    ev_can = hyper_evaluator(field, canon, prec)
    ev_swp = hyper_evaluator(field, swapped, prec)
    rec = _Recorder("gfun-props", field, prec, ev_raw.ndigits, 0, "exhaustive")
    sample = [field.from_code(c) for c in range(1, min(q, 25))]
    for t in sample:
        va = ev_raw.value_at(t).value
        vb = ev_can.value_at(t).value
        vc = ev_swp.value_at(t).value
        rec.case({"property": "fractional-shift", "t": t.code},
                 va.to_text(), vb.to_text(), va.eq_at(vb, prec))
        rec.case({"property": "reorder", "t": t.code},
                 vb.to_text(), vc.to_text(), vb.eq_at(vc, prec))
        bound = -canon.arity * r
        rec.case({"property": "valuation-bound", "t": t.code},
                 f"valuation {va.val if not va.is_zero() else 'zero'}",
                 f">= {bound}", va.is_zero() or va.val >= bound)
    if q == 25:
        alt = build_field(p, r, modulus=(3, 0, 1))
        ev_alt = hyper_evaluator(alt, canon, prec)
        for tc in range(1, p):
            v1 = ev_can.value_at(field.from_int(tc)).value
            v2 = ev_alt.value_at(alt.from_int(tc)).value
            rec.case({"property": "model-independence", "t": tc},
                     v1.to_text(), v2.to_text(), v1.to_text() == v2.to_text())
    else:
        rec.skip({"property": "model-independence"},
                 "second modulus comparison is defined for q = 25")
    return rec.done()


def _power_sum(field: FiniteField, d: int, a) -> int:
    """sum_{j<l} chi^j(-a) for chi of order l = gcd(d-1, q-1), as the
    generator-independent solution count of x^(d-1) = -a."""
    return count_power_solutions(field, d - 1, -a)


def run_sum_even(field: FiniteField, d: int, prec: int = 4,
                 grid: str = "exhaustive", seed: int = DEFAULT_SEED) -> Report:
    """Even-d summation identities, square and non-square b branches."""
    p, q = field.p, field.q
    _require(d >= 4 and d % 2 == 0, "even suite needs even d >= 4")
    _require(d * (d - 1) % p, f"p={p} divides d(d-1)")
    ev_main = hyper_evaluator(field, even_main_params(d), prec)
    ev_red = hyper_evaluator(field, even_reduced_params(d), prec)
    rec = _Recorder("sum-even", field, prec, ev_main.ndigits, seed, grid)
    phi = field.quad_char
    zero = ev_main.ctx.zero()
    for a, b in grid_pairs(field, grid, seed):
        params = {"a": a.code, "b": b.code, "d": d}
        f0 = hyper_argument(field, d, a, b, "linear")
        g0 = hyper_argument(field, d, a, b, "subleading")
        if phi(b) == -1:
            lf = zero
            lg = zero
            for y in field.elements():
                s = phi(y * y - b)
                lf = lf + s * ev_main.value_at(hyper_argument(field, d, a, b, "linear", y)).value
                lg = lg + s * ev_main.value_at(hyper_argument(field, d, a, b, "subleading", y)).value
            rf = -1 - q * ev_red.value_at(f0).value
            rg = -1 + q * ev_red.value_at(g0).value
            rec.case({**params, "identity": "nonsquare-f"},
                     lf.to_text(), rf.to_text(), lf.eq_at(rf, prec))
            rec.case({**params, "identity": "nonsquare-g"},
                     lg.to_text(), rg.to_text(), lg.eq_at(rg, prec))
        else:
            root = field.sqrt(b)
            excluded = {root.code, (-root).code}
            chi_sum = _power_sum(field, d, a)
            lf = zero + (1 + 2 * chi_sum)
            lg = zero + 3
            for y in field.elements():
                if y.code in excluded:
                    continue
                s = phi(y * y - b)
                lf = lf + s * ev_main.value_at(hyper_argument(field, d, a, b, "linear", y)).value
                lg = lg + s * ev_main.value_at(hyper_argument(field, d, a, b, "subleading", y)).value
            rf = -q * ev_red.value_at(f0).value
            rg = -q * ev_red.value_at(g0).value
            rec.case({**params, "identity": "square-f"},
                     lf.to_text(), rf.to_text(), lf.eq_at(rf, prec))
            rec.case({**params, "identity": "square-g"},
                     lg.to_text(), rg.to_text(), lg.eq_at(rg, prec))
    return rec.done()


def run_sum_odd(field: FiniteField, d: int, prec: int = 4,
                grid: str = "exhaustive", seed: int = DEFAULT_SEED) -> Report:
    """Odd-d summation identities; the 1/q forms are compared after clearing
    denominators so every congruence is between p-integral values."""
    p, q = field.p, field.q
    _require(d >= 3 and d % 2 == 1, "odd suite needs odd d >= 3")
    _require(d * (d - 1) % p, f"p={p} divides d(d-1)")
    ev_main = hyper_evaluator(field, odd_main_params(d), prec)
    ev_red = hyper_evaluator(field, odd_reduced_params(d), prec)
    ev_pri = hyper_evaluator(field, odd_primed_reduced_params(d), prec)
    rec = _Recorder("sum-odd", field, prec, ev_main.ndigits, seed, grid)
    phi = field.quad_char
    zero = ev_main.ctx.zero()
    for a, b in grid_pairs(field, grid, seed):
        params = {"a": a.code, "b": b.code, "d": d}
        f0 = hyper_argument(field, d, a, b, "linear")
        g0 = hyper_argument(field, d, a, b, "subleading")
        if phi(b) == -1:
            lf = zero
            lg = zero
            for y in field.elements():
                lf = lf + ev_main.value_at(-hyper_argument(field, d, a, b, "linear", y)).value
                lg = lg + phi(y * y - b) * ev_main.value_at(-hyper_argument(field, d, a, b, "subleading", y)).value
            lg = phi(a) * lg
            rf = q * ev_red.value_at(-f0).value
            rg = q * ev_pri.value_at(-g0).value
            rec.case({**params, "identity": "nonsquare-f"},
                     lf.to_text(), rf.to_text(), lf.eq_at(rf, prec))
            rec.case({**params, "identity": "nonsquare-g"},
                     lg.to_text(), rg.to_text(), lg.eq_at(rg, prec))
        else:
            root = field.sqrt(b)
            excluded = {root.code, (-root).code}
            chi_sum = _power_sum(field, d, a)
            lf = zero
            lg = zero
            for y in field.elements():
                if y.code in excluded:
                    continue
                lf = lf + ev_main.value_at(-hyper_argument(field, d, a, b, "linear", y)).value
                lg = lg + phi(y * y - b) * ev_main.value_at(-hyper_argument(field, d, a, b, "subleading", y)).value
            rf = -2 * phi(-a) * chi_sum - q * ev_red.value_at(-f0).value
            lg = -2 - phi(a) * lg
            rg = q * ev_pri.value_at(-g0).value
            rec.case({**params, "identity": "square-f"},
                     lf.to_text(), rf.to_text(), lf.eq_at(rf, prec))
            rec.case({**params, "identity": "square-g"},
                     lg.to_text(), rg.to_text(), lg.eq_at(rg, prec))
    return rec.done()


_QUARTER = (Fraction(1, 4), Fraction(3, 4))


def run_transform_2g2(field: FiniteField, prec: int = 4, grid: str = "exhaustive",
                      seed: int = DEFAULT_SEED) -> Report:
    """Lower-parameter switch (1/3, 2/3) <-> (1/6, 5/6) and its corollary."""
    p, q = field.p, field.q
    _require(p > 3, "transformation needs p > 3")
    ev_third = hyper_evaluator(field, HyperParams(_QUARTER, (Fraction(1, 3), Fraction(2, 3))), prec)
    ev_sixth = hyper_evaluator(field, HyperParams(_QUARTER, (Fraction(1, 6), Fraction(5, 6))), prec)
    rec = _Recorder("transform-2g2", field, prec, ev_third.ndigits, seed, grid)
    phi = field.quad_char
    m27 = field.from_int(-27)
    four = field.from_int(4)
    for a, b in grid_pairs(field, grid, seed):
        params = {"a": a.code, "b": b.code}
        z = m27 * b * b / (four * a ** 3)
        if z == field.one:
            rec.skip({**params, "identity": "main"},
                     "argument 1 is excluded by the transformation hypothesis")
        else:
            lhs = ev_third.value_at(z).value
            rhs = phi(-a) * ev_sixth.value_at(z).value
            rec.case({**params, "identity": "main", "z": z.code},
                     lhs.to_text(), rhs.to_text(), lhs.eq_at(rhs, prec))
        w = -m27 * b * b / (four * a ** 6)
        if w == field.one:
            rec.skip({**params, "identity": "corollary"},
                     "argument 1 is excluded by the transformation hypothesis")
        else:
            lhs = ev_third.value_at(w).value
            rhs = ev_sixth.value_at(w).value
            rec.case({**params, "identity": "corollary", "z": w.code},
                     lhs.to_text(), rhs.to_text(), lhs.eq_at(rhs, prec))
    return rec.done()


def run_counts(field: FiniteField, d: int, prec: int = 4, grid: str = "exhaustive",
               seed: int = DEFAULT_SEED) -> Report:
    """Brute-force curve points against the closed form, both shapes."""
    p, q = field.p, field.q
    _require(d * (d - 1) % p, f"p={p} divides d(d-1)")
    _require(p ** prec > 2 * q, "precision does not pin the point count")
    n_work = prec + max(d - 2, d - 1) * field.r + field.r + 2
    rec = _Recorder("counts", field, prec, n_work, seed, grid)
    for shape in ("linear", "subleading"):
        for a, b in grid_pairs(field, grid, seed):
            fam = CurveFamily(d, a, b, shape)
            truth = count_curve_points(field, fam)
            pred = predicted_curve_points(field, fam, prec)
            truth_q = pred.ctx.integer(truth)
            rec.case({"shape": shape, "d": d, "a": a.code, "b": b.code},
                     truth_q.to_text(), pred.to_text(), pred.eq_at(truth_q, prec))
    return rec.done()


def run_roots(field: FiniteField, d: int, prec: int = 4, grid: str = "exhaustive",
              seed: int = DEFAULT_SEED) -> Report:
    """Distinct trinomial roots against the closed form, both shapes."""
    p, q = field.p, field.q
    _require(d * (d - 1) % p, f"p={p} divides d(d-1)")
    _require(p ** prec > d, "precision does not pin the root count")
    n_work = prec + (d - 1) * field.r + field.r + 2
    rec = _Recorder("roots", field, prec, n_work, seed, grid)
    for shape in ("linear", "subleading"):
        for a, b in grid_pairs(field, grid, seed):
            truth = count_trinomial_roots(field, d, a, b, shape)
            pred = predicted_root_count(field, d, a, b, shape, prec)
            truth_q = pred.ctx.integer(truth)
            rec.case({"shape": shape, "d": d, "a": a.code, "b": b.code},
                     truth_q.to_text(), pred.to_text(), pred.eq_at(truth_q, prec))
    return rec.done()


_SPECIAL_01 = HyperParams((Fraction(0), Fraction(1, 2)),
                          (Fraction(1, 6), Fraction(5, 6)))


def _multiplicity(a, b, c) -> int:
    return 1 if (a == b or b == c or a == c) else 2


def run_specials(field: FiniteField, prec: int = 4) -> Report:
    """Special-value sweeps and the fixed-argument evaluations."""
    p, q = field.p, field.q
    _require(p >= 5, "special values need p >= 5")
    ev = hyper_evaluator(field, _SPECIAL_01, prec)
    ctx = ev.ctx
    phi = field.quad_char
    rec = _Recorder("specials", field, prec, ev.ndigits, 0, "exhaustive")

    for a in field.units():
        for b in field.units():
            c = -(a + b)
            if not c:
                continue
            s1 = a * b + b * c + c * a
            if not s1:
                continue
            arg = field.from_int(-27) * (a * b * c) ** 2 / (field.from_int(4) * s1 ** 3)
            lhs = ev.value_at(arg).value
            rhs = ctx.integer(_multiplicity(a, b, c) * phi(-s1))
            rec.case({"identity": "zero-sum-triple", "a": a.code, "b": b.code, "c": c.code},
                     lhs.to_text(), rhs.to_text(), lhs.eq_at(rhs, prec))

    for a in field.units():
        for b in field.units():
            if not a + b:
                continue
            c = -(a * b) / (a + b)
            s0 = a + b + c
            if not s0:
                continue
            arg = field.from_int(-27) * a * b * c / (field.from_int(4) * s0 ** 3)
            lhs = ev.value_at(arg).value
            rhs = ctx.integer(_multiplicity(a, b, c) * phi(-(a * b * c * s0)))
            rec.case({"identity": "zero-product-triple", "a": a.code, "b": b.code, "c": c.code},
                     lhs.to_text(), rhs.to_text(), lhs.eq_at(rhs, prec))

    lhs = ev.value_at(field.one).value
    rhs = ctx.integer(phi(field.from_int(3)))
    rec.case({"identity": "at-1"}, lhs.to_text(), rhs.to_text(), lhs.eq_at(rhs, prec))

    if p > 7:
        arg = field.from_rational(Fraction(243, 343))
        lhs = ev.value_at(arg).value
        rhs = ctx.integer(2 * phi(field.from_int(7)))
        rec.case({"identity": "at-243/343"}, lhs.to_text(), rhs.to_text(),
                 lhs.eq_at(rhs, prec))
    else:
        rec.skip({"identity": "at-243/343"}, "needs p > 7")

    if p > 13:
        arg = field.from_rational(Fraction(972, 2197))
        lhs = ev.value_at(arg).value
        rhs = ctx.integer(2 * phi(field.from_int(13)))
        rec.case({"identity": "at-972/2197"}, lhs.to_text(), rhs.to_text(),
                 lhs.eq_at(rhs, prec))
    else:
        rec.skip({"identity": "at-972/2197"}, "needs p > 13")

    ev3 = hyper_evaluator(field, HyperParams(
        (Fraction(1, 6), Fraction(1, 2), Fraction(5, 6)),
        (Fraction(0), Fraction(1, 4), Fraction(3, 4))), prec)
    lhs = ev3.value_at(field.one).value
    rhs = ctx.integer(phi(field.from_int(-3)) + phi(field.from_int(6)))
    rec.case({"identity": "ternary-at-1"}, lhs.to_text(), rhs.to_text(),
             lhs.eq_at(rhs, prec))

    if p > 7 and p != 23:
        ev4 = hyper_evaluator(field, HyperParams(
            (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)),
            (Fraction(1, 10), Fraction(3, 10), Fraction(7, 10), Fraction(9, 10))), prec)
        arg4 = field.from_rational(Fraction(-3125, 256))
        lhs = ev4.value_at(arg4).value
        inner = ev.value_at(field.from_rational(Fraction(27, 4))).value
        rhs = phi(field.from_int(-1)) * inner + (phi(field.from_int(-1)) + phi(field.from_int(3)))
        rec.case({"identity": "quaternary-at--3125/256"}, lhs.to_text(), rhs.to_text(),
                 lhs.eq_at(rhs, prec))
    else:
        rec.skip({"identity": "quaternary-at--3125/256"}, "needs p > 7 and p != 23")
    return rec.done()


def run_gauss_complex(field: FiniteField, tol: float = 1e-8) -> Report:
    """Complex-oracle identities plus Davenport-Hasse for k in {2, 3}."""
    q = field.q
    rec = _Recorder("gauss-complex", field, 0, 0, 0, "exhaustive")
    report = check_gauss_lemmas(field, tol)
    for key in ("trivial_sum", "conjugate_product", "magnitude",
                "theta_expansion", "theta_additive", "theta_total"):
        dev = report[key]
        rec.case({"identity": key}, f"max deviation {dev:.3e}",
                 f"tolerance {tol:.1e}", dev < tol)
    for k in (2, 3):
        if (q - 1) % k:
            rec.skip({"identity": "davenport-hasse", "k": k},
                     f"q = {q} is not 1 mod {k}")
            continue
        for psi in range(q - 1):
            ok = check_davenport_hasse(field, k, psi, tol)
            rec.case({"identity": "davenport-hasse", "k": k, "psi": psi},
                     "product over order-k twists",
                     "Gauss sum of psi^k times psi(k^-k)", ok)
    return rec.done()


def run_gross_koblitz(field: FiniteField, pi_prec: int = 12) -> Report:
    """Gauss sum versus gamma product, every character index, mod pi^pi_prec."""
    rec = _Recorder("gross-koblitz", field, pi_prec, 0, 0, "exhaustive")
    for a in range(field.q - 1):
        lhs, rhs = gross_koblitz_sides(field, a, pi_prec)
        rec.case({"a": a, "piPrecision": pi_prec},
                 lhs.to_text(pi_prec), rhs.to_text(pi_prec),
                 lhs.congruent(rhs, pi_prec))
    return rec.done()


# ---------------------------------------------------------------------------

def run_suite(config: SuiteConfig) -> Report:
    """Dispatch one suite; deterministic for a fixed config and seed."""
    if config.suite not in SUITES:
        raise ValueError(f"unknown suite {config.suite!r}; choose from {SUITES}")
    needs_d = config.suite in ("floors", "sum-even", "sum-odd", "counts", "roots")
    if needs_d and config.d is None:
        raise ValueError(f"suite {config.suite!r} requires d")
    if config.suite == "gamma-lemmas":
        report = run_gamma_lemmas(config.p, config.prec)
    else:
        field = build_field(config.p, config.r)
        if config.suite == "floors":
            report = run_floors(field, config.d, config.prec)
        elif config.suite == "gfun-props":
            report = run_gfun_props(field, config.prec)
        elif config.suite == "sum-even":
            report = run_sum_even(field, config.d, config.prec, config.grid, config.seed)
        elif config.suite == "sum-odd":
            report = run_sum_odd(field, config.d, config.prec, config.grid, config.seed)
        elif config.suite == "transform-2g2":
            report = run_transform_2g2(field, config.prec, config.grid, config.seed)
        elif config.suite == "counts":
            report = run_counts(field, config.d, config.prec, config.grid, config.seed)
        elif config.suite == "roots":
            report = run_roots(field, config.d, config.prec, config.grid, config.seed)
        elif config.suite == "specials":
            report = run_specials(field, config.prec)
        elif config.suite == "gauss-complex":
            report = run_gauss_complex(field, config.tol)
        else:
            report = run_gross_koblitz(field, config.pi_prec)
    if config.json_path:
        report.write(config.json_path)
    return report
