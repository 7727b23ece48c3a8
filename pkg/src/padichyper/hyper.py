"""The p-adic hypergeometric sum over F_q and its parameter families.

For parameter lists (a_1..a_n; b_1..b_n) of p-integral rationals and
t in F_q the value is

    -1/(q-1) * sum_{j=0}^{q-2} (-1)^{jn} wbar^j(t)
        * prod_{i<=n} prod_{k<r} (-p)^(-floor(<a_i p^k> - j p^k/(q-1))
                                  -floor(<-b_i p^k> + j p^k/(q-1)))
          * gamma(<(a_i - j/(q-1)) p^k>) / gamma(<a_i p^k>)
          * gamma(<(-b_i + j/(q-1)) p^k>) / gamma(<-b_i p^k>)

where wbar is the inverse Teichmueller character and gamma is Morita's
p-adic gamma.  The value depends only on the fractional parts of the
parameters and not on their order; at t = 0 every summand carries
wbar^j(0) = 0, so the value is defined to be 0.

Everything j-dependent except the character twist is independent of t, so an
evaluator precomputes one scalar per j and an evaluation at t costs O(q)
unit multiplications.  Each (i, k) factor contributes a (-p)-exponent in
{-1, 0, 1}; the evaluator works at ndigits = prec + n*r + r + 2 so that after
dividing out the worst-case p^(n*r) the result still carries prec + r + 2
guaranteed absolute digits.  All floors and fractional parts are exact
rational arithmetic; no floating point enters this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPIntegralError, PrecisionExhaustedError, UnsupportedConfigurationError
from .ff import FiniteField, FqElem
from .gammap import padic_gamma
from .padic import QqNum, get_context, teichmuller_powers


def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class HyperParams:
    """Upper and lower parameter lists; entries are exact rationals."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.upper) != len(self.lower):
            raise ValueError("parameter lists must have equal length")
        object.__setattr__(self, "upper", tuple(Fraction(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(Fraction(b) for b in self.lower))

    @property
    def arity(self) -> int:
        return len(self.upper)

    def validate_for(self, p: int) -> None:
        for x in self.upper + self.lower:
            if x.denominator % p == 0:
                raise NotPIntegralError(f"parameter {x} is not p-integral for p={p}")


def canonical(params: HyperParams) -> HyperParams:
    """Fractional parts in [0, 1), each list sorted ascending.

    The sum is invariant under both reductions, so this is a normal form.
    """
    return HyperParams(tuple(sorted(_frac(a) for a in params.upper)),
                       tuple(sorted(_frac(b) for b in params.lower)))


@dataclass(frozen=True)
class HyperValue:
    """An evaluated sum with its precision bookkeeping."""

    value: QqNum
    requested_prec: int
    guaranteed_prec: int


class HyperEvaluator:
    """Evaluates one parameter family over one field at many arguments.

    Construction precomputes the j-indexed gamma/floor data; ``value_at``
    then costs one table lookup and one unit multiply-add per j.  Instances
    are immutable after construction and safe to share.
    """

    def __init__(self, field: FiniteField, params: HyperParams, prec: int):
        if prec < 1:
            raise ValueError("requested precision must be >= 1")
        params.validate_for(field.p)
        self.field = field
        self.params = params
        self.prec = prec
        p, r, q = field.p, field.r, field.q
        n = params.arity
        self.scale = n * r
        self.ndigits = prec + n * r + r + 2
        self.ctx = get_context(field, self.ndigits)
        pn = self.ctx.pn
        gamma = padic_gamma(p, self.ndigits)
        qm1 = q - 1

        static = 1
        afr = [[_frac(a * p ** k) for k in range(r)] for a in params.upper]
        bfr = [[_frac(-b * p ** k) for k in range(r)] for b in params.lower]
        for i in range(n):
            for k in range(r):
                static = static * gamma.at(afr[i][k]) % pn
                static = static * gamma.at(bfr[i][k]) % pn
        static_inv = pow(static, -1, pn)

        coeffs = []
        for j in range(qm1):
            jq = Fraction(j, qm1)
            u = 1
            expo = 0
            for i in range(n):
                a_i = params.upper[i]
                b_i = params.lower[i]
                for k in range(r):
                    pk = p ** k
                    sh = jq * pk
                    e = -math.floor(afr[i][k] - sh) - math.floor(bfr[i][k] + sh)
                    if e < -1 or e > 1:
                        raise PrecisionExhaustedError(
                            f"(-p) exponent {e} outside [-1, 1] at j={j}")
                    expo += e
                    u = u * gamma.at(_frac((a_i - jq) * pk)) % pn
                    u = u * gamma.at(_frac((-b_i + jq) * pk)) % pn
            u = u * static_inv % pn
            sign = -1 if (j * n + expo) & 1 else 1
            coeffs.append(sign * u * p ** (self.scale + expo) % pn)
        self.coeffs = coeffs
        self.weights = teichmuller_powers(field, self.ndigits)
        self.final_factor = (-pow(qm1, -1, pn)) % pn

    def value_at(self, t: FqElem) -> HyperValue:
        """The sum at argument t, guaranteed to prec + r + 2 absolute digits."""
        ctx = self.ctx
        guaranteed = self.ndigits - self.scale
        if t.code == 0:
            return HyperValue(ctx.zero(), self.prec, guaranteed)
        field = self.field
        qm1 = field.q - 1
        s = field.dlog(t)
        r, pn = ctx.r, ctx.pn
        acc = [0] * r
        weights = self.weights
        for j, c in enumerate(self.coeffs):
            w = weights[(-j * s) % qm1]
            for idx in range(r):
                acc[idx] = (acc[idx] + c * w[idx]) % pn
        ff = self.final_factor
        acc = [a * ff % pn for a in acc]
        v = ctx.vval(acc)
        if v >= ctx.n:
            value = ctx.zero(guaranteed)
        else:
            value = QqNum(ctx, v - self.scale, ctx.vshift_down(acc, v), ctx.n - v)
            if value.val < -self.scale:
                # every summand has valuation >= -n*r, so this is a bug tripwire
                raise PrecisionExhaustedError("value fell below the valuation bound")
        return HyperValue(value._truncate(guaranteed), self.prec, guaranteed)


_evaluator_cache: dict = {}


def hyper_evaluator(field: FiniteField, params: HyperParams, prec: int) -> HyperEvaluator:
    """Shared evaluator; the per-j precomputation is reused across arguments."""
    key = (field.signature, params.upper, params.lower, prec)
    ev = _evaluator_cache.get(key)
    if ev is None or ev.field is not field:
        ev = HyperEvaluator(field, params, prec)
        _evaluator_cache[key] = ev
    return ev


def hyper_sum(field: FiniteField, upper, lower, t: FqElem, prec: int) -> HyperValue:
    """One-shot evaluation of the sum with parameter lists upper; lower."""
    params = HyperParams(tuple(Fraction(a) for a in upper),
                         tuple(Fraction(b) for b in lower))
    return hyper_evaluator(field, params, prec).value_at(t)


# ---------------------------------------------------------------------------
# parameter families attached to the trinomial curves y^2 = x^d + a x + b and
# y^2 = x^d + a x^(d-1) + b

def even_main_params(d: int) -> HyperParams:
    """Arity d-1 family for even d: odd halves over 2(d-1); 0 and h/d skipping d/2."""
    if d < 4 or d % 2:
        raise UnsupportedConfigurationError("even family needs even d >= 4")
    upper = tuple(Fraction(h, 2 * (d - 1)) for h in range(1, 2 * d - 2, 2))
    lower = (Fraction(0),) + tuple(Fraction(h, d) for h in range(1, d) if h != d // 2)
    return HyperParams(upper, lower)


def even_reduced_params(d: int) -> HyperParams:
    """Arity d-2 family for even d: h/(d-1) over h/d skipping d/2."""
    if d < 4 or d % 2:
        raise UnsupportedConfigurationError("even family needs even d >= 4")
    upper = tuple(Fraction(h, d - 1) for h in range(1, d - 1))
    lower = tuple(Fraction(h, d) for h in range(1, d) if h != d // 2)
    return HyperParams(upper, lower)


def odd_main_params(d: int) -> HyperParams:
    """Arity d-1 family for odd d: h/(d-1) from 0, over odd halves of 2d skipping d."""
    if d < 3 or d % 2 == 0:
        raise UnsupportedConfigurationError("odd family needs odd d >= 3")
    upper = tuple(Fraction(h, d - 1) for h in range(d - 1))
    lower = tuple(Fraction(h, 2 * d) for h in range(1, 2 * d, 2) if h != d)
    return HyperParams(upper, lower)


def odd_reduced_params(d: int) -> HyperParams:
    """Arity d-1 family for odd d: odd halves of 2(d-1) over odd halves of 2d."""
    if d < 3 or d % 2 == 0:
        raise UnsupportedConfigurationError("odd family needs odd d >= 3")
    upper = tuple(Fraction(h, 2 * (d - 1)) for h in range(1, 2 * d - 2, 2))
    lower = tuple(Fraction(h, 2 * d) for h in range(1, 2 * d, 2) if h != d)
    return HyperParams(upper, lower)


def odd_primed_reduced_params(d: int) -> HyperParams:
    """Arity d-1 family for odd d: h/(d-1) plus 1/2, over all h/d."""
    if d < 3 or d % 2 == 0:
        raise UnsupportedConfigurationError("odd family needs odd d >= 3")
    upper = tuple(Fraction(h, d - 1) for h in range(1, d - 1)) + (Fraction(1, 2),)
    lower = tuple(Fraction(h, d) for h in range(1, d))
    return HyperParams(upper, lower)


FAMILIES = ("even", "odd", "odd-primed")


def family_params(family: str, d: int) -> tuple[HyperParams, HyperParams]:
    """(main, reduced) parameter pair for one summation-identity family."""
    if family == "even":
        return even_main_params(d), even_reduced_params(d)
    if family == "odd":
        return odd_main_params(d), odd_reduced_params(d)
    if family == "odd-primed":
        return odd_main_params(d), odd_primed_reduced_params(d)
    raise UnsupportedConfigurationError(f"unknown family {family!r}")
