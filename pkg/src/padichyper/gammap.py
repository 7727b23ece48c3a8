"""Morita's p-adic gamma function modulo p^N.

Two evaluation paths share one contract:

* ``GammaTable`` precomputes gamma at every residue class mod p^N in one
  O(p^N) sweep of the recurrence ``gamma(k+1) = -k * gamma(k)`` (the factor
  -k degenerates to -1 when p | k).  Lookup is then a single index, which is
  exact because gamma(x) mod p^N depends only on x mod p^N.

* ``PadicGamma`` additionally covers moduli far beyond any sensible table.
  The partial product prod_{0<j<m, p|j excluded} j is assembled from base-p
  digit blocks: the units in an aligned block [S, S + p^t) multiply to
  Q_t(S) where Q_t(X) = prod_{0<u<p^t, p not| u} (X + u), and since S is a
  multiple of p^t only the coefficients of X^s with s*t < N survive mod p^N.
  The truncated Q_t are built once by Taylor-shifting Q_{t-1}, so one gamma
  value costs O(p N^2) word operations instead of O(p^N).

Arguments are exact rationals with p-coprime denominator; floating point
never enters this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPIntegralError, ResourceBudgetError
from .ff import build_field
from .padic import PadicContext, QqNum, get_context

#: hard cap for dense tables (documented memory budget)
TABLE_BUDGET = 100_000_000
#: dense tables are used below this size, digit blocks above
_DENSE_LIMIT = 1_000_000


def _build_values(p: int, ndigits: int) -> list[int]:
    pn = p ** ndigits
    values = [1] * pn
    v = 1
    for k in range(pn - 1):
        v = (-(k * v if k % p else v)) % pn
        values[k + 1] = v
    return values


@dataclass(frozen=True)
class GammaTable:
    """Dense table of gamma(k) mod p^ndigits for 0 <= k < p^ndigits."""

    p: int
    ndigits: int
    values: tuple[int, ...]


def build_gamma_table(p: int, ndigits: int) -> GammaTable:
    if p ** ndigits > TABLE_BUDGET:
        raise ResourceBudgetError(
            f"table of {p}^{ndigits} entries exceeds budget of {TABLE_BUDGET}")
    return GammaTable(p, ndigits, tuple(_build_values(p, ndigits)))


def residue_of(x: Fraction, p: int, ndigits: int) -> int:
    """The integer in [0, p^ndigits) congruent to a p-integral rational."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NotPIntegralError(f"{x} is not p-integral for p={p}")
    pn = p ** ndigits
    return x.numerator * pow(x.denominator, -1, pn) % pn


def gamma_p(table: GammaTable, x: Fraction) -> QqNum:
    """gamma at a p-integral rational, as a unit of Z_p at table precision."""
    m = residue_of(x, table.p, table.ndigits)
    ctx = prime_context(table.p, table.ndigits)
    return QqNum(ctx, 0, (table.values[m],), table.ndigits)


def prime_context(p: int, ndigits: int) -> PadicContext:
    return get_context(build_field(p, 1), ndigits)


def reflection_sign(x: Fraction, p: int) -> int:
    """(-1)^{x_0} with x_0 in {1..p} congruent to x mod p."""
    x0 = residue_of(x, p, 1) or p
    return -1 if x0 & 1 else 1


# ---------------------------------------------------------------------------

def _linmul_trunc(poly: list[int], u: int, klen: int, pn: int) -> list[int]:
    # poly * (X + u), truncated to klen coefficients
    out = [0] * min(len(poly) + 1, klen)
    for i, c in enumerate(poly):
        if c:
            if i < klen:
                out[i] = (out[i] + c * u) % pn
            if i + 1 < klen:
                out[i + 1] = (out[i + 1] + c) % pn
    return out


def _polymul_trunc(a: list[int], b: list[int], klen: int, pn: int) -> list[int]:
    out = [0] * min(len(a) + len(b) - 1, klen)
    for i, ai in enumerate(a):
        if ai and i < klen:
            for j, bj in enumerate(b):
                if i + j >= klen:
                    break
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % pn
    return out


def _taylor_shift(poly: list[int], s: int, pn: int) -> list[int]:
    # poly(X + s) mod pn
    if s % pn == 0:
        return poly[:]
    n = len(poly)
    out = [0] * n
    for i in range(n - 1, -1, -1):
        # Horner in (X + s): out <- out*(X+s) + poly[i]
        for j in range(n - 1, 0, -1):
            out[j] = (out[j - 1] + out[j] * s) % pn
        out[0] = (out[0] * s + poly[i]) % pn
    return out


class PadicGamma:
    """Gamma evaluations mod p^ndigits with per-residue caching.

    Below _DENSE_LIMIT entries the dense recurrence table is used; above it
    the digit-block product described in the module docstring.
    """

    def __init__(self, p: int, ndigits: int):
        self.p = p
        self.ndigits = ndigits
        self.pn = p ** ndigits
        self._cache: dict[int, int] = {}
        if self.pn <= _DENSE_LIMIT:
            self._values = _build_values(p, ndigits)
            self._blocks = None
        else:
            self._values = None
            self._blocks = self._build_blocks()

    def _build_blocks(self) -> dict[int, list[int]]:
        p, n, pn = self.p, self.ndigits, self.pn
        polys: dict[int, list[int]] = {}
        q1 = [1]
        for u in range(1, p):
            q1 = _linmul_trunc(q1, u, n, pn)
        polys[1] = q1
        for t in range(2, n):
            klen = -(-n // t)
            prev = polys[t - 1]
            base = p ** (t - 1)
            acc = [1]
            for c in range(p):
                acc = _polymul_trunc(acc, _taylor_shift(prev, c * base, pn), klen, pn)
            polys[t] = acc
        return polys

    def _eval_block(self, t: int, s: int) -> int:
        pn = self.pn
        acc = 0
        for c in reversed(self._blocks[t]):
            acc = (acc * s + c) % pn
        return acc

    def _gamma_int(self, m: int) -> int:
        # gamma(m) = (-1)^m * prod_{0<j<m, p not| j} j  mod p^n
        if self._values is not None:
            return self._values[m]
        p, pn = self.p, self.pn
        result = 1
        prefix = 0
        digits = []
        mm = m
        while mm:
            mm, d = divmod(mm, p)
            digits.append(d)
        for t in range(len(digits) - 1, -1, -1):
            d = digits[t]
            step = p ** t
            if t == 0:
                for c in range(d):
                    s = prefix + c
                    if s % p:
                        result = result * s % pn
            else:
                for c in range(d):
                    result = result * self._eval_block(t, prefix + c * step) % pn
            prefix += d * step
        if m & 1:
            result = -result % pn
        return result

    def at(self, x: Fraction) -> int:
        """gamma(x) mod p^ndigits as an integer unit."""
        m = residue_of(x, self.p, self.ndigits)
        got = self._cache.get(m)
        if got is None:
            got = self._gamma_int(m)
            self._cache[m] = got
        return got


_gamma_cache: dict[tuple[int, int], PadicGamma] = {}


def padic_gamma(p: int, ndigits: int) -> PadicGamma:
    key = (p, ndigits)
    g = _gamma_cache.get(key)
    if g is None:
        g = _gamma_cache[key] = PadicGamma(p, ndigits)
    return g


# ---------------------------------------------------------------------------
# built-in identity checks on the gamma layer

def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def functional_equation_case(table: GammaTable, k: int) -> tuple[int, int]:
    """Both sides of gamma(x) gamma(1-x) = (-1)^{x_0} at the residue x = k."""
    pn = table.p ** table.ndigits
    lhs = table.values[k] * table.values[(1 - k) % pn] % pn
    x0 = k % table.p or table.p
    rhs = (-1 if x0 & 1 else 1) % pn
    return lhs, rhs


def gamma_product_lemma_case(field, m: int, ndigits: int) -> tuple[int, int]:
    """Frobenius-orbit product of gamma pairs against (-1)^r omega_bar^m(-1).

    First form: for 0 < m <= q-2,
        prod_i gamma(<(1 - m/(q-1)) p^i>) gamma(<m p^i/(q-1)>) = (-1)^r (-1)^m.
    Returns (lhs, rhs) as residues mod p^ndigits.
    """
    p, r, q = field.p, field.r, field.q
    g = padic_gamma(p, ndigits)
    pn = p ** ndigits
    mm = Fraction(m, q - 1)
    lhs = 1
    for i in range(r):
        pk = p ** i
        lhs = lhs * g.at(_frac((1 - mm) * pk)) % pn
        lhs = lhs * g.at(_frac(mm * pk)) % pn
    # omega_bar^m(-1) = (-1)^m since omega(-1) = -1
    rhs = ((-1) ** (r + m)) % pn
    return lhs, rhs


def gamma_product_lemma_half_case(field, m: int, ndigits: int) -> tuple[int, int]:
    """Half-shifted form: for m != (q-1)/2,
        prod_i gamma(<(1/2 - m/(q-1)) p^i>) gamma(<(1/2 + m/(q-1)) p^i>)
              / gamma(<p^i/2>)^2  =  omega_bar^m(-1).
    """
    p, r, q = field.p, field.r, field.q
    g = padic_gamma(p, ndigits)
    pn = p ** ndigits
    mm = Fraction(m, q - 1)
    half = Fraction(1, 2)
    num, den = 1, 1
    for i in range(r):
        pk = p ** i
        num = num * g.at(_frac((half - mm) * pk)) % pn
        num = num * g.at(_frac((half + mm) * pk)) % pn
        hv = g.at(_frac(half * pk))
        den = den * hv * hv % pn
    lhs = num * pow(den, -1, pn) % pn
    rhs = ((-1) ** m) % pn
    return lhs, rhs


def power_product_formula_case(field, m: int, x: Fraction, ndigits: int) -> tuple:
    """Gauss-style multiplication formula for gamma along a Frobenius orbit.

    For p-coprime m >= 1 and x in [0, 1] with (q-1)x integral:
        prod_i prod_{h=0..m-1} gamma(<((x+h)/m) p^i>)
      = omega(m^{(1-x)(1-q)}) prod_i [ gamma(<x p^i>) prod_{h=1..m-1} gamma(<h p^i/m>) ]
    Returns (lhs_vec, rhs_vec) as Z_q unit vectors mod p^ndigits.
    """
    from .padic import teichmuller  # local import keeps module load light

    p, r, q = field.p, field.r, field.q
    ctx = get_context(field, ndigits)
    g = padic_gamma(p, ndigits)
    pn = p ** ndigits
    lhs_scalar = 1
    rhs_scalar = 1
    for i in range(r):
        pk = p ** i
        for h in range(m):
            lhs_scalar = lhs_scalar * g.at(_frac(Fraction(x + h, m) * pk)) % pn
        rhs_scalar = rhs_scalar * g.at(_frac(x * pk)) % pn
        for h in range(1, m):
            rhs_scalar = rhs_scalar * g.at(_frac(Fraction(h, m) * pk)) % pn
    e = (1 - x) * (1 - q)
    assert e.denominator == 1
    omega_arg = field.from_int(m) ** (int(e) % (q - 1))
    w = teichmuller(field, omega_arg, ndigits)
    lhs = ctx.vint(lhs_scalar)
    rhs = ctx.vscale(w.unit, rhs_scalar)
    return lhs, rhs


def gamma_multiplication_lemma_case(field, j: int, t: int, ndigits: int) -> tuple:
    """The two product identities tying gamma orbits to omega(t^{+-tj}).

    Returns ((lhs1, rhs1), (lhs2, rhs2)) as Z_q unit vectors mod p^ndigits:
        omega(t^{tj})  prod_i gamma(<t p^i j/(q-1)>)  prod_h gamma(<h p^i/t>)
            = prod_i prod_{h=0..t-1} gamma(<p^i h/t + p^i j/(q-1)>)
        omega(t^{-tj}) prod_i gamma(<-t p^i j/(q-1)>) prod_h gamma(<h p^i/t>)
            = prod_i prod_{h=0..t-1} gamma(<p^i (1+h)/t - p^i j/(q-1)>)
    """
    from .padic import teichmuller

    p, r, q = field.p, field.r, field.q
    if t % p == 0:
        raise NotPIntegralError("t must be coprime to p")
    ctx = get_context(field, ndigits)
    g = padic_gamma(p, ndigits)
    pn = p ** ndigits
    jq = Fraction(j, q - 1)

    def orbit(sign: int):
        scal = 1
        for i in range(r):
            pk = p ** i
            scal = scal * g.at(_frac(sign * t * pk * jq)) % pn
            for h in range(1, t):
                scal = scal * g.at(_frac(Fraction(h, t) * pk)) % pn
        return scal

    def rhs_prod(shift_one: bool):
        scal = 1
        for i in range(r):
            pk = p ** i
            for h in range(t):
                arg = (Fraction(h + 1, t) - jq) if shift_one else (Fraction(h, t) + jq)
                scal = scal * g.at(_frac(arg * pk)) % pn
        return scal

    tj = (t * j) % (q - 1)
    w_pos = teichmuller(field, field.from_int(t) ** tj, ndigits)
    w_neg = teichmuller(field, field.from_int(t) ** ((-t * j) % (q - 1)), ndigits)
    lhs1 = ctx.vscale(w_pos.unit, orbit(+1))
    rhs1 = ctx.vint(rhs_prod(False))
    lhs2 = ctx.vscale(w_neg.unit, orbit(-1))
    rhs2 = ctx.vint(rhs_prod(True))
    return (lhs1, rhs1), (lhs2, rhs2)
