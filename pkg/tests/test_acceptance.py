"""Acceptance suite: one test per criterion, at the full stated grids.

Each test prints a single ``ACCEPTANCE Cnn ...: PASS`` line (visible with
``pytest -s``); the pytest verdict of the test itself is the pass/fail
record.  Runtime budgets are asserted where stated.
"""

import math
import time
from fractions import Fraction

import pytest

from padichyper import (
    CurveFamily,
    build_field,
    build_gamma_table,
    check_davenport_hasse,
    check_gauss_lemmas,
    check_gross_koblitz,
    count_curve_points,
    count_trinomial_roots,
    gauss_sum_complex,
    hyper_sum,
    predicted_curve_points,
    predicted_root_count,
)
from padichyper.gammap import (
    functional_equation_case,
    gamma_product_lemma_case,
    gamma_product_lemma_half_case,
)
from padichyper.harness import (
    grid_pairs,
    run_floors,
    run_gfun_props,
    run_specials,
    run_sum_even,
    run_sum_odd,
    run_transform_2g2,
)

PREC = 4

FLOOR_FIELDS = [(5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (5, 2), (7, 2),
                (11, 2), (13, 2)]   # q = 5, 7, 9, 11, 13, 25, 49, 121, 169
COUNT_FIELDS_EXH = [(5, 1), (7, 1), (3, 2), (11, 1), (13, 1)]
COUNT_FIELDS_SAMPLED = [(5, 2), (7, 2), (11, 2), (13, 2)]
SUM_FIELDS = [(5, 1), (7, 1), (11, 1), (13, 1), (5, 2)]


def _admissible(p: int, d: int) -> bool:
    return d * (d - 1) % p != 0


def test_c01_gamma_functional_equation():
    for p in (3, 5, 7):
        start = time.monotonic()
        table = build_gamma_table(p, 4)
        for x in range(p ** 4):
            lhs, rhs = functional_equation_case(table, x)
            assert lhs == rhs, (p, x)
        assert time.monotonic() - start < 5.0, f"p={p} exceeded 5 s"
    print("\nACCEPTANCE C01 gamma functional equation (p in {3,5,7}, N=4): PASS")


def test_c02_floor_identities():
    start = time.monotonic()
    total = 0
    for p, r in FLOOR_FIELDS:
        field = build_field(p, r)
        for d in (3, 4, 5, 6, 7):
            if not _admissible(p, d):
                continue
            report = run_floors(field, d)
            assert report.failed == 0, (p, r, d, report.to_json())
            total += report.passed
    from padichyper import floor_identity_even
    assert floor_identity_even(5, 1, 4, 1, 0) == (1, 1)  # hand-derived instance
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"floor sweep took {elapsed:.1f} s"
    print(f"\nACCEPTANCE C02 floor identities ({total} cases, {elapsed:.1f}s): PASS")


def test_c03_gamma_product_identity():
    for p, r in [(5, 1), (7, 1), (3, 2), (5, 2), (7, 2)]:  # q = 5, 7, 9, 25, 49
        field = build_field(p, r)
        q = field.q
        for m in range(1, q - 1):
            lhs, rhs = gamma_product_lemma_case(field, m, PREC)
            assert lhs == rhs, ("orbit", p, r, m)
        for m in range(0, q - 1):
            if 2 * m == q - 1:
                continue
            lhs, rhs = gamma_product_lemma_half_case(field, m, PREC)
            assert lhs == rhs, ("half", p, r, m)
    print("\nACCEPTANCE C03 gamma orbit-product identity, both parts: PASS")


def _count_case(field, d, shape, a, b):
    fam = CurveFamily(d, a, b, shape)
    truth = count_curve_points(field, fam)
    pred = predicted_curve_points(field, fam, PREC)
    assert pred.eq_at(pred.ctx.integer(truth), PREC), \
        (field.q, d, shape, a.code, b.code, truth, pred.to_text())


def test_c04_point_count_predictions():
    start = time.monotonic()
    cases = 0
    for fields, grid in ((COUNT_FIELDS_EXH, "exhaustive"),
                         (COUNT_FIELDS_SAMPLED, "sample:50")):
        for p, r in fields:
            field = build_field(p, r)
            assert p ** PREC > 2 * field.q  # congruence pins the integer
            pairs = grid_pairs(field, grid, seed=2014)
            for d in (3, 4, 5):
                if not _admissible(p, d):
                    continue
                for shape in ("linear", "subleading"):
                    for a, b in pairs:
                        _count_case(field, d, shape, a, b)
                        cases += 1
    f5 = build_field(5, 1)
    assert count_curve_points(f5, CurveFamily(3, f5.one, f5.one, "linear")) == 8
    assert count_curve_points(f5, CurveFamily(4, f5.one, f5.one, "linear")) == 7
    elapsed = time.monotonic() - start
    assert elapsed < 300.0, f"point counts took {elapsed:.1f} s"
    print(f"\nACCEPTANCE C04 point counts ({cases} cases, {elapsed:.1f}s): PASS")


def test_c05_root_count_predictions():
    cases = 0
    for fields, grid in ((COUNT_FIELDS_EXH, "exhaustive"),
                         (COUNT_FIELDS_SAMPLED, "sample:50")):
        for p, r in fields:
            field = build_field(p, r)
            assert p ** PREC > 7  # pins any root count
            pairs = grid_pairs(field, grid, seed=2014)
            for d in (3, 4, 5):
                if not _admissible(p, d):
                    continue
                for shape in ("linear", "subleading"):
                    for a, b in pairs:
                        truth = count_trinomial_roots(field, d, a, b, shape)
                        pred = predicted_root_count(field, d, a, b, shape, PREC)
                        assert pred.eq_at(pred.ctx.integer(truth), PREC), \
                            (field.q, d, shape, a.code, b.code)
                        cases += 1
    print(f"\nACCEPTANCE C05 root counts ({cases} cases): PASS")


def test_c06_summation_identities():
    start = time.monotonic()
    cases = 0
    for p, r in SUM_FIELDS:
        field = build_field(p, r)
        grid = "exhaustive" if field.q <= 13 else "sample:30"
        for d in (3, 4, 5):
            if not _admissible(p, d):
                continue
            runner = run_sum_even if d % 2 == 0 else run_sum_odd
            report = runner(field, d, PREC, grid, seed=2014)
            assert report.failed == 0, (p, r, d, report.to_json()[:2000])
            cases += report.passed
    elapsed = time.monotonic() - start
    assert elapsed < 600.0, f"summation sweep took {elapsed:.1f} s"
    print(f"\nACCEPTANCE C06 summation identities ({cases} cases, {elapsed:.1f}s): PASS")


def test_c07_transformation():
    skipped = 0
    cases = 0
    for p, r in SUM_FIELDS:
        field = build_field(p, r)
        grid = "exhaustive" if field.q <= 13 else "sample:30"
        report = run_transform_2g2(field, PREC, grid, seed=2014)
        assert report.failed == 0, (p, r, report.to_json()[:2000])
        for case in report.cases:
            if "skipped" in case:
                assert "excluded" in case["skipped"]
        skipped += report.skipped
        cases += report.passed
    print(f"\nACCEPTANCE C07 transformation ({cases} cases, {skipped} skipped): PASS")


def test_c08_special_values():
    for p, r in [(5, 1), (7, 1), (11, 1), (13, 1), (5, 2), (7, 2)]:  # q <= 49
        field = build_field(p, r)
        report = run_specials(field, PREC)
        assert report.failed == 0, (p, r, report.to_json()[:2000])
        if p > 7 and p != 23:
            assert any(c["params"]["identity"] == "quaternary-at--3125/256"
                       for c in report.cases if "equal" in c)
    f5 = build_field(5, 1)
    hv = hyper_sum(f5, [Fraction(0), Fraction(1, 2)],
                   [Fraction(1, 6), Fraction(5, 6)], f5.one, PREC)
    assert hv.value.eq_at(hv.value.ctx.integer(-1), PREC)
    print("\nACCEPTANCE C08 special values (sweeps for q<=49, fixed arguments): PASS")


def test_c09_complex_gauss_oracle():
    tol = 1e-8
    q_seen = set()
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
              67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131,
              137, 139, 149, 151, 157, 163, 167):
        for r in (1, 2, 3, 4):
            q = p ** r
            if q > 169:
                break
            field = build_field(p, r)
            q_seen.add(q)
            for m in range(1, q - 1):
                assert abs(abs(gauss_sum_complex(field, m)) - math.sqrt(q)) < tol
            report = check_gauss_lemmas(field, tol)
            assert report["ok"], (q, report)
            for k in (2, 3):
                if (q - 1) % k:
                    continue
                for psi in range(q - 1):
                    assert check_davenport_hasse(field, k, psi, tol), (q, k, psi)
    assert {5, 7, 9, 25, 27, 49, 81, 121, 125, 169} <= q_seen
    print(f"\nACCEPTANCE C09 complex Gauss oracle ({len(q_seen)} fields): PASS")


def test_c10_pi_adic_gauss_factorisation():
    start = time.monotonic()
    for p, r in [(5, 1), (7, 1), (3, 2), (5, 2)]:  # q = 5, 7, 9, 25
        field = build_field(p, r)
        for a in range(field.q - 1):
            assert check_gross_koblitz(field, a, 12), (field.q, a)
    elapsed = time.monotonic() - start
    assert elapsed < 120.0, f"pi-adic sweep took {elapsed:.1f} s"
    print(f"\nACCEPTANCE C10 pi-adic Gauss factorisation ({elapsed:.1f}s): PASS")


def test_c11_evaluator_properties():
    for p, r in [(5, 1), (7, 1), (5, 2)]:
        report = run_gfun_props(build_field(p, r), PREC)
        assert report.failed == 0, (p, r, report.to_json()[:2000])
    rep25 = run_gfun_props(build_field(5, 2), PREC)
    assert any(c["params"].get("property") == "model-independence"
               for c in rep25.cases if "equal" in c)
    print("\nACCEPTANCE C11 evaluator properties incl. model independence: PASS")
