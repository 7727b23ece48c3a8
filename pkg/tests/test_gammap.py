from fractions import Fraction

import pytest

from padichyper import (
    NotPIntegralError,
    PadicGamma,
    ResourceBudgetError,
    build_field,
    build_gamma_table,
    gamma_p,
)
from padichyper.gammap import (
    _build_values,
    functional_equation_case,
    gamma_multiplication_lemma_case,
    gamma_product_lemma_case,
    gamma_product_lemma_half_case,
    power_product_formula_case,
    residue_of,
)


def direct_gamma(m, p, pn):
    prod = 1
    for j in range(1, m):
        if j % p:
            prod = prod * j % pn
    return (-prod) % pn if m % 2 else prod


def test_table_fixtures():
    t = build_gamma_table(5, 2)
    assert t.values[5] == direct_gamma(5, 5, 25) == 1   # -(1*2*3*4) = -24
    assert t.values[1] == 24
    assert t.values[13] == direct_gamma(13, 5, 25) == 18
    # the recurrence invariant, full wrap included
    pn = 25
    for k in range(pn):
        nxt = t.values[(k + 1) % pn] if k + 1 < pn else 1  # gamma(p^N) = gamma(0)
        step = (-k * t.values[k]) % pn if k % 5 else (-t.values[k]) % pn
        assert nxt == step, k


def test_gamma_p_examples():
    t = build_gamma_table(5, 2)
    v = gamma_p(t, Fraction(1, 2))
    assert v.unit == (18,) and v.val == 0
    assert residue_of(Fraction(1, 2), 5, 2) == 13
    assert (18 * 18) % 25 == 24  # cross-check against the reflection sign (-1)^3
    assert gamma_p(t, Fraction(0)).unit == (1,)
    assert gamma_p(t, Fraction(1)).unit == (24,)
    with pytest.raises(NotPIntegralError):
        gamma_p(t, Fraction(1, 5))


def test_outputs_are_units():
    g = PadicGamma(7, 4)
    for num in range(0, 40):
        for den in (1, 2, 3, 48):
            v = g.at(Fraction(num, den))
            assert v % 7 != 0


def test_budget_error():
    with pytest.raises(ResourceBudgetError):
        build_gamma_table(11, 9)  # 11^9 > 10^8 entries


@pytest.mark.parametrize("p,n", [(3, 4), (5, 4), (7, 3)])
def test_functional_equation_exhaustive(p, n):
    t = build_gamma_table(p, n)
    for k in range(p ** n):
        lhs, rhs = functional_equation_case(t, k)
        assert lhs == rhs, k


def test_block_evaluator_matches_dense_table():
    blocky = PadicGamma.__new__(PadicGamma)
    blocky.p, blocky.ndigits, blocky.pn = 5, 4, 625
    blocky._cache = {}
    blocky._values = None
    blocky._blocks = blocky._build_blocks()
    dense = _build_values(5, 4)
    for m in range(625):
        assert blocky._gamma_int(m) == dense[m], m


@pytest.mark.parametrize("p,n", [(13, 6), (7, 8)])
def test_block_evaluator_matches_direct_product(p, n):
    g = PadicGamma(p, n)
    assert g._values is None  # large modulus must take the block path
    pn = p ** n
    samples = [0, 1, 2, p, p + 1, p ** 2 + 5, p ** 3 + p * 7 + 1,
               3 * p ** 5 + 4 * p ** 2 + 7, p ** 5 - 1]
    for m in samples:
        assert g._gamma_int(m) == direct_gamma(m, p, pn), m


@pytest.mark.parametrize("p,r", [(5, 1), (7, 1), (3, 2), (5, 2), (7, 2)])
def test_gamma_product_lemma_both_parts(p, r):
    field = build_field(p, r)
    q = field.q
    for m in range(1, q - 1):
        lhs, rhs = gamma_product_lemma_case(field, m, 4)
        assert lhs == rhs, m
    for m in range(0, q - 1):
        if 2 * m == q - 1:
            continue
        lhs, rhs = gamma_product_lemma_half_case(field, m, 4)
        assert lhs == rhs, m


@pytest.mark.parametrize("p,r", [(5, 1), (3, 2), (7, 1), (5, 2)])
def test_gamma_multiplication_lemma(p, r):
    field = build_field(p, r)
    q = field.q
    for t in (2, 3, 4, 5, 6, 7):
        if t % p == 0:
            continue
        for j in range(q - 1):
            (l1, r1), (l2, r2) = gamma_multiplication_lemma_case(field, j, t, 4)
            assert l1 == r1, (t, j)
            assert l2 == r2, (t, j)


@pytest.mark.parametrize("p,r", [(5, 1), (3, 2), (5, 2), (11, 2)])
def test_power_product_formula(p, r):
    field = build_field(p, r)
    q = field.q
    for m in (2, 3, 4, 5, 6):
        if m % p == 0:
            continue
        for k in range(0, q, max(1, q // 24)):
            x = Fraction(min(k, q - 1), q - 1)
            lhs, rhs = power_product_formula_case(field, m, x, 4)
            assert lhs == rhs, (m, x)
