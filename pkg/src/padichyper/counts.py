"""Brute-force ground truth and closed-form predictions for trinomial curves.

The curves are y^2 = x^d + a x + b ("linear" shape) and
y^2 = x^d + a x^(d-1) + b ("subleading" shape) with a, b nonzero and
p not dividing d(d-1).  Counts are affine: a point is an (x, y) pair, so the
brute-force count is sum_x (1 + phi(rhs(x))) with phi(0) = 0.

Predictions express the same counts through the hypergeometric sum evaluated
at the curve-specific argument

    f(y) = (d/a) ((b - y^2) d / (a(d-1)))^(d-1)      (linear)
    g(y) = (d (b - y^2)/a) (d / (a(d-1)))^(d-1)      (subleading)

at y = 0.  Root counts of the trinomials themselves use the arity-(d-1)
families at the same arguments.  Brute force is the oracle everywhere; the
closed form is always the side under test.

The floor identities used to separate the (-p)-powers in the derivations are
exposed as exact integer pairs so a harness can sweep them.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedConfigurationError
from .ff import FiniteField, FqElem
from .hyper import (
    even_main_params,
    even_reduced_params,
    hyper_evaluator,
    odd_main_params,
    odd_primed_reduced_params,
    odd_reduced_params,
)
from .padic import QqNum

SHAPES = ("linear", "subleading")


@dataclass(frozen=True)
class CurveFamily:
    """One trinomial curve y^2 = x^d + a x + b or y^2 = x^d + a x^(d-1) + b."""

    d: int
    a: FqElem
    b: FqElem
    shape: str

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise UnsupportedConfigurationError(f"unknown shape {self.shape!r}")
        if not self.a or not self.b:
            raise UnsupportedConfigurationError("a and b must be nonzero")
        p = self.a.field.p
        if self.d * (self.d - 1) % p == 0:
            raise UnsupportedConfigurationError(
                f"p={p} divides d(d-1) for d={self.d}")


def curve_rhs(fam: CurveFamily, x: FqElem) -> FqElem:
    if fam.shape == "linear":
        return x ** fam.d + fam.a * x + fam.b
    return x ** fam.d + fam.a * x ** (fam.d - 1) + fam.b


def count_curve_points(field: FiniteField, fam: CurveFamily) -> int:
    """Exact affine point count: one x-sweep counting y solutions by phi."""
    total = 0
    for x in field.elements():
        total += 1 + field.quad_char(curve_rhs(fam, x))
    return total


def hyper_argument(field: FiniteField, d: int, a: FqElem, b: FqElem,
                   shape: str, y: FqElem | None = None) -> FqElem:
    """f(y) or g(y); y = None means y = 0."""
    bb = b if y is None else b - y * y
    dd = field.from_int(d)
    dm1 = field.from_int(d - 1)
    if shape == "linear":
        return (dd / a) * ((bb * dd) / (a * dm1)) ** (d - 1)
    return (dd * bb / a) * (dd / (a * dm1)) ** (d - 1)


def predicted_curve_points(field: FiniteField, fam: CurveFamily, prec: int) -> QqNum:
    """Closed-form count as a p-adic value at >= prec + r absolute digits."""
    d, a, b = fam.d, fam.a, fam.b
    q = field.q
    phi = field.quad_char
    arg0 = hyper_argument(field, d, a, b, fam.shape)
    if d % 2 == 0:
        ev = hyper_evaluator(field, even_reduced_params(d), prec)
        if fam.shape == "linear":
            return q - 1 - q * ev.value_at(arg0).value
        return q - 1 - q * phi(b) * ev.value_at(arg0).value
    if fam.shape == "linear":
        ev = hyper_evaluator(field, odd_reduced_params(d), prec)
        return q - q * phi(-a * b) * ev.value_at(-arg0).value
    ev = hyper_evaluator(field, odd_primed_reduced_params(d), prec)
    return q - q * phi(b) * ev.value_at(-arg0).value


def count_poly_roots(field: FiniteField, coeffs) -> int:
    """Number of distinct roots in F_q of sum coeffs[i] x^i, by enumeration."""
    cs = [field.from_int(c) if isinstance(c, int) else c for c in coeffs]
    count = 0
    for x in field.elements():
        acc = field.zero
        for c in reversed(cs):
            acc = acc * x + c
        if not acc:
            count += 1
    return count


def trinomial_coeffs(field: FiniteField, d: int, a: FqElem, b: FqElem, shape: str):
    cs = [field.zero] * (d + 1)
    cs[0] = b
    cs[d] = field.one
    if shape == "linear":
        cs[1] = a
    else:
        cs[d - 1] = a
    return cs


def count_trinomial_roots(field: FiniteField, d: int, a: FqElem, b: FqElem,
                          shape: str) -> int:
    return count_poly_roots(field, trinomial_coeffs(field, d, a, b, shape))


def predicted_root_count(field: FiniteField, d: int, a: FqElem, b: FqElem,
                         shape: str, prec: int) -> QqNum:
    """Closed-form distinct-root count of the trinomial as a p-adic value."""
    if d * (d - 1) % field.p == 0:
        raise UnsupportedConfigurationError("p divides d(d-1)")
    if not a or not b:
        raise UnsupportedConfigurationError("a and b must be nonzero")
    phi = field.quad_char
    arg0 = hyper_argument(field, d, a, b, shape)
    if d % 2 == 0:
        ev = hyper_evaluator(field, even_main_params(d), prec)
        return 1 + phi(-b) * ev.value_at(arg0).value
    ev = hyper_evaluator(field, odd_main_params(d), prec)
    if shape == "linear":
        return 1 + phi(-a) * ev.value_at(-arg0).value
    return 1 + phi(-a * b) * ev.value_at(-arg0).value


def count_power_solutions(field: FiniteField, k: int, gamma: FqElem) -> int:
    """Brute-force N(x^k = gamma) for gamma != 0, cross-checked against the
    order-gcd(k, q-1) character sum realised with complex roots of unity."""
    if not gamma:
        raise ValueError("gamma must be nonzero")
    count = sum(1 for x in field.units() if x ** k == gamma)
    delta = math.gcd(k, field.q - 1)
    e = field.dlog(gamma)
    csum = sum(cmath.exp(2j * cmath.pi * j * e / delta) for j in range(delta))
    assert abs(csum.real - count) < 1e-9 and abs(csum.imag) < 1e-9, \
        "character-sum form disagrees with enumeration"
    return count


# ---------------------------------------------------------------------------
# floor identities behind the (-p)-power bookkeeping

def floor_identity_even(p: int, r: int, d: int, m: int, i: int) -> tuple[int, int]:
    """Even d >= 4, 1 <= m <= q-2 with m != (q-1)/2, 0 <= i < r.

    lhs = floor(-2mt) + floor(mdt) + floor(-m(d-1)t) - floor(-mt) + 1 at
    t = p^i/(q-1); rhs re-expresses it through the family's shifted floors.
    """
    q = p ** r
    t = Fraction(m * p ** i, q - 1)
    lhs = (math.floor(-2 * t) + math.floor(d * t) + math.floor(-(d - 1) * t)
           - math.floor(-t) + 1)
    rhs = sum(math.floor(_fr(Fraction(h * p ** i, d - 1)) - t) for h in range(1, d - 1))
    rhs += sum(math.floor(_fr(Fraction(-h * p ** i, d)) + t)
               for h in range(1, d) if h != d // 2)
    return lhs, rhs


def floor_identity_odd(p: int, r: int, d: int, m: int, i: int) -> tuple[int, int]:
    """Odd d >= 3, 1 <= m <= q-2, 0 <= i < r (no midpoint exclusion)."""
    q = p ** r
    t = Fraction(m * p ** i, q - 1)
    lhs = (math.floor(-2 * t) + math.floor(d * t) + math.floor(-(d - 1) * t)
           - math.floor(-t) + 1)
    rhs = sum(math.floor(_fr(Fraction(h * p ** i, d - 1)) - t) for h in range(1, d - 1))
    rhs += math.floor(_fr(Fraction(p ** i, 2)) - t)
    rhs += sum(math.floor(_fr(Fraction(-h * p ** i, d)) + t) for h in range(1, d))
    return lhs, rhs


def floor_identity_odd_doubled(p: int, r: int, d: int, m: int, i: int) -> tuple[int, int]:
    """Odd d >= 3, 0 <= m <= q-2 with m != (q-1)/2: the doubled-index form."""
    q = p ** r
    t = Fraction(m * p ** i, q - 1)
    lhs = (math.floor(-2 * t) + math.floor(2 * d * t) + math.floor(-2 * (d - 1) * t)
           - math.floor(-t) - math.floor(d * t) - math.floor(-(d - 1) * t))
    rhs = sum(math.floor(_fr(Fraction(h * p ** i, 2 * (d - 1))) - t)
              for h in range(1, 2 * d - 2, 2))
    rhs += sum(math.floor(_fr(Fraction(-h * p ** i, 2 * d)) + t)
               for h in range(1, 2 * d, 2) if h != d)
    return lhs, rhs


def _fr(x: Fraction) -> Fraction:
    return x - math.floor(x)
