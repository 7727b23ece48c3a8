"""Fixed-precision arithmetic in Q_p, its unramified degree-r extension Q_q,
and the ramified quotient Z_q[pi]/(pi^(p-1) + p).

Values are QqNum triples (valuation, unit, known digits): the unit is a
length-r coefficient vector over Z/p^N reduced modulo the integer lift of the
field modulus, and the value is known modulo p^(valuation + digits).
Addition can lose precision through cancellation; multiplication adds
valuations and keeps the minimum relative precision.  Everything here is
immutable and pure, so values can be shared freely.

Printing grammar (used verbatim in JSON reports)::

    p^v * [c_0, ..., c_{r-1}] (mod p^n)     value p^v * u, unit known mod p^n
    0 (mod p^a)                             zero to absolute precision a
    0 (exact)                               exact zero

so the absolute precision of a nonzero value is v + n.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotPIntegralError, PrecisionExhaustedError
from .ff import FiniteField, FqElem

#: absolute-precision sentinel for exact zeros
EXACT = 10 ** 9


def _ival(n: int, p: int, cap: int) -> int:
    """p-adic valuation of an integer, capped (val of 0 returns cap)."""
    if n == 0:
        return cap
    v = 0
    while n % p == 0 and v < cap:
        n //= p
        v += 1
    return v


class PadicContext:
    """Arithmetic context for Z_q[1/p] at a fixed number of unit digits N.

    The lifted modulus is the field modulus with coefficients taken as plain
    integer lifts; any monic lift presents the same unramified ring, and the
    verbatim lift keeps construction deterministic.
    """

    def __init__(self, field: FiniteField, ndigits: int):
        if ndigits < 1:
            raise ValueError("need at least one digit of precision")
        self.field = field
        self.p = field.p
        self.r = field.r
        self.q = field.q
        self.n = ndigits
        self.pn = field.p ** ndigits
        self.modulus = tuple(int(c) for c in field.modulus)

    # -- raw vector helpers (tuples of ints mod p^n) -------------------------

    def vzero(self) -> tuple[int, ...]:
        return (0,) * self.r

    def vone(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.r - 1)

    def vint(self, c: int) -> tuple[int, ...]:
        return (c % self.pn,) + (0,) * (self.r - 1)

    def vadd(self, a, b):
        pn = self.pn
        return tuple((x + y) % pn for x, y in zip(a, b))

    def vsub(self, a, b):
        pn = self.pn
        return tuple((x - y) % pn for x, y in zip(a, b))

    def vscale(self, a, c: int):
        pn = self.pn
        return tuple(x * c % pn for x in a)

    def vmul(self, a, b):
        r, pn = self.r, self.pn
        if r == 1:
            return (a[0] * b[0] % pn,)
        prod = [0] * (2 * r - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % pn
        mod = self.modulus
        for deg in range(2 * r - 2, r - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                off = deg - r
                for j in range(r):
                    if mod[j]:
                        prod[off + j] = (prod[off + j] - c * mod[j]) % pn
        return tuple(prod[:r])

    def vpow(self, a, e: int):
        result = self.vone()
        b = a
        while e:
            if e & 1:
                result = self.vmul(result, b)
            b = self.vmul(b, b)
            e >>= 1
        return result

    def vval(self, a) -> int:
        """Minimum p-valuation over coefficients, capped at n."""
        v = self.n
        for c in a:
            if c:
                v = min(v, _ival(c, self.p, self.n))
                if v == 0:
                    return 0
        return v

    def vshift_down(self, a, k: int):
        pk = self.p ** k
        return tuple(c // pk for c in a)

    def vinv(self, a):
        """Inverse of a unit vector, by residue-field inverse plus Newton lifting."""
        p, pn = self.p, self.pn
        code = 0
        for c in reversed(a):
            code = code * p + (c % p)
        if code == 0:
            raise ZeroDivisionError("vector is not a unit")
        ybar = self.field.from_code(code).inverse()
        y = tuple(int(c) for c in ybar.coeffs)
        two = self.vint(2)
        cur = 1
        while cur < self.n:
            y = self.vmul(y, self.vsub(two, self.vmul(a, y)))
            cur *= 2
        return y

    def vreduce_mod_p(self, a) -> FqElem:
        p = self.p
        code = 0
        for c in reversed(a):
            code = code * p + (c % p)
        return self.field.from_code(code)

    # -- QqNum constructors ---------------------------------------------------

    def zero(self, aprec: int = EXACT) -> "QqNum":
        return QqNum(self, aprec, None, 0)

    def integer(self, k: int) -> "QqNum":
        if k == 0:
            return self.zero()
        v = 0
        while k % self.p == 0:
            k //= self.p
            v += 1
        return QqNum(self, v, self.vint(k), self.n)

    def rational(self, x: Fraction) -> "QqNum":
        return embed_rational(x, self)

    def make(self, val: int, unit, ndigits: int) -> "QqNum":
        return QqNum(self, val, tuple(unit), min(ndigits, self.n))


_context_cache: dict = {}


def get_context(field: FiniteField, ndigits: int) -> PadicContext:
    key = (field.signature, ndigits)
    ctx = _context_cache.get(key)
    if ctx is None or ctx.field is not field:
        ctx = PadicContext(field, ndigits)
        _context_cache[key] = ctx
    return ctx


class QqNum:
    """Element of Q_q known to finite precision; see module docstring."""

    __slots__ = ("ctx", "val", "unit", "ndigits")

    def __init__(self, ctx: PadicContext, val: int, unit, ndigits: int):
        self.ctx = ctx
        self.val = val
        self.unit = unit
        self.ndigits = ndigits

    def is_zero(self) -> bool:
        return self.unit is None

    @property
    def aprec(self) -> int:
        """Absolute precision: the value is known modulo p^aprec."""
        return self.val if self.unit is None else self.val + self.ndigits

    def _with_ctx(self, ctx: PadicContext) -> "QqNum":
        # retag under a wider context over the same field; the stored unit is
        # still a valid representative and ndigits keeps the honest precision
        return QqNum(ctx, self.val, self.unit, self.ndigits)

    def _aligned(self, other: "QqNum") -> tuple["QqNum", "QqNum"]:
        if self.ctx is other.ctx:
            return self, other
        if self.ctx.field.signature != other.ctx.field.signature:
            raise ValueError("values live over different fields")
        ctx = self.ctx if self.ctx.n >= other.ctx.n else other.ctx
        return self._with_ctx(ctx), other._with_ctx(ctx)

    # -- arithmetic -----------------------------------------------------------

    def __neg__(self):
        if self.unit is None:
            return self
        pn = self.ctx.pn
        return QqNum(self.ctx, self.val, tuple((-c) % pn for c in self.unit), self.ndigits)

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ctx.integer(other)
        if not isinstance(other, QqNum):
            return NotImplemented
        self, other = self._aligned(other)
        ctx = self.ctx
        a = min(self.aprec, other.aprec)
        if self.unit is None and other.unit is None:
            return ctx.zero(a)
        if self.unit is None:
            return other._truncate(a)
        if other.unit is None:
            return self._truncate(a)
        v0 = min(self.val, other.val)
        p = ctx.p
        x = ctx.vscale(self.unit, p ** (self.val - v0))
        y = ctx.vscale(other.unit, p ** (other.val - v0))
        s = ctx.vadd(x, y)
        vs = ctx.vval(s)
        if v0 + vs >= a:
            return ctx.zero(a)
        return QqNum(ctx, v0 + vs, ctx.vshift_down(s, vs), min(a - v0 - vs, ctx.n))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ctx.integer(other)
        if not isinstance(other, QqNum):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.ctx.integer(other)
        if not isinstance(other, QqNum):
            return NotImplemented
        self, other = self._aligned(other)
        ctx = self.ctx
        if self.unit is None or other.unit is None:
            # |xy| <= p^-(aprec_zero + val_other); both zero: sum of aprecs
            a = min(self.aprec + other.val if other.unit is not None else EXACT,
                    other.aprec + self.val if self.unit is not None else EXACT,
                    self.aprec + other.aprec)
            return ctx.zero(min(a, EXACT))
        return QqNum(ctx, self.val + other.val, ctx.vmul(self.unit, other.unit),
                     min(self.ndigits, other.ndigits))

    __rmul__ = __mul__

    def inv(self) -> "QqNum":
        if self.unit is None:
            raise PrecisionExhaustedError(
                "cannot invert a value indistinguishable from 0 at this precision")
        return QqNum(self.ctx, -self.val, self.ctx.vinv(self.unit), self.ndigits)

    def _truncate(self, aprec: int) -> "QqNum":
        if self.unit is None:
            return QqNum(self.ctx, min(self.val, aprec), None, 0)
        if self.val >= aprec:
            return self.ctx.zero(aprec)
        return QqNum(self.ctx, self.val, self.unit, min(self.ndigits, aprec - self.val))

    # -- comparison and rendering ---------------------------------------------

    def eq_at(self, other: "QqNum", aprec: int) -> bool:
        """Congruence modulo p^aprec; raises if either side is too imprecise."""
        if min(self.aprec, other.aprec) < aprec:
            raise PrecisionExhaustedError(
                f"values known only mod p^{min(self.aprec, other.aprec)}, "
                f"need p^{aprec}")
        d = self - other
        return d.unit is None or d.val >= aprec

    def residue_mod_p(self) -> FqElem:
        """Reduction to the residue field (valuation must be >= 0)."""
        if self.unit is None:
            return self.ctx.field.zero
        if self.val < 0:
            raise ValueError("negative valuation has no residue")
        if self.val > 0:
            return self.ctx.field.zero
        return self.ctx.vreduce_mod_p(self.unit)

    def to_text(self) -> str:
        p = self.ctx.p
        if self.unit is None:
            if self.val >= EXACT:
                return "0 (exact)"
            return f"0 (mod {p}^{self.val})"
        pk = p ** self.ndigits
        coeffs = ", ".join(str(c % pk) for c in self.unit)
        return f"{p}^{self.val} * [{coeffs}] (mod {p}^{self.ndigits})"

    __str__ = to_text

    def __repr__(self):
        return f"QqNum({self.to_text()})"


def embed_rational(x: Fraction, ctx: PadicContext) -> QqNum:
    """Image of a rational with p-coprime denominator, to full context precision."""
    x = Fraction(x)
    if x.denominator % ctx.p == 0:
        raise NotPIntegralError(f"{x} is not p-integral for p={ctx.p}")
    if x.numerator == 0:
        return ctx.zero()
    v = _ival(x.numerator, ctx.p, EXACT)
    unit = (x.numerator // ctx.p ** v) * pow(x.denominator, -1, ctx.pn) % ctx.pn
    return QqNum(ctx, v, ctx.vint(unit), ctx.n)


# ---------------------------------------------------------------------------
# Teichmueller lifts

def _teich_vec(ctx: PadicContext, x: FqElem) -> tuple[int, ...]:
    # iterate y <- y^p; each block of r steps stabilises one more digit
    y = tuple(int(c) for c in x.coeffs)
    for _ in range(ctx.n * ctx.r):
        y = ctx.vpow(y, ctx.p)
    return y


def teichmuller(field: FiniteField, x: FqElem, ndigits: int) -> QqNum:
    """The (q-1)-th root of unity in Z_q congruent to x mod p (0 maps to 0)."""
    ctx = get_context(field, ndigits)
    if x.code == 0:
        return ctx.zero()
    return QqNum(ctx, 0, _teich_vec(ctx, x), ndigits)


def teichmuller_powers(field: FiniteField, ndigits: int) -> list[tuple[int, ...]]:
    """Raw unit vectors W[e] = omega(g)^e mod p^ndigits, for e in [0, q-1).

    Cached on the field; the table realises every character value needed by
    the hypergeometric kernel with one lookup.
    """
    cache = field._caches.setdefault("teich", {})
    table = cache.get(ndigits)
    if table is None:
        ctx = get_context(field, ndigits)
        wg = _teich_vec(ctx, field.generator)
        table = [ctx.vone()]
        for _ in range(field.q - 2):
            table.append(ctx.vmul(table[-1], wg))
        cache[ndigits] = table
    return table


# ---------------------------------------------------------------------------
# the ramified ring Z_q[pi] / (pi^(p-1) + p)

class PiAdicContext:
    """Coefficient vectors of length p-1 over Z_q, with pi^(p-1) folded to -p."""

    def __init__(self, qctx: PadicContext):
        self.qctx = qctx
        self.e = qctx.p - 1

    def zero(self) -> "PiAdic":
        return PiAdic(self, ((self.qctx.vzero(),) * self.e))

    def one(self) -> "PiAdic":
        return self.from_scalar(self.qctx.vone())

    def from_scalar(self, vec) -> "PiAdic":
        coeffs = [self.qctx.vzero()] * self.e
        coeffs[0] = tuple(vec)
        return PiAdic(self, tuple(coeffs))

    def pi_power(self, k: int) -> "PiAdic":
        """pi^k = (-p)^(k div (p-1)) * pi^(k mod (p-1)) for k >= 0."""
        if k < 0:
            raise ValueError("negative pi powers are not represented")
        j, l = k % self.e, k // self.e
        scal = pow(-self.qctx.p, l, self.qctx.pn)
        coeffs = [self.qctx.vzero()] * self.e
        coeffs[j] = self.qctx.vint(scal)
        return PiAdic(self, tuple(coeffs))

    def embed(self, other: "PiAdic") -> "PiAdic":
        """Embed an element with prime-field coefficients into this ring."""
        if other.ctx.e != self.e:
            raise ValueError("ramification degrees differ")
        pn = self.qctx.pn
        return PiAdic(self, tuple(self.qctx.vint(c[0] % pn) for c in other.coeffs))


class PiAdic:
    """Immutable element of Z_q[pi]/(pi^(p-1) + p)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: PiAdicContext, coeffs):
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    def __add__(self, other: "PiAdic") -> "PiAdic":
        q = self.ctx.qctx
        return PiAdic(self.ctx, tuple(q.vadd(a, b)
                                      for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "PiAdic") -> "PiAdic":
        q = self.ctx.qctx
        return PiAdic(self.ctx, tuple(q.vsub(a, b)
                                      for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        q = self.ctx.qctx
        return PiAdic(self.ctx, tuple(q.vscale(a, -1) for a in self.coeffs))

    def scale(self, vec) -> "PiAdic":
        """Multiply by a Z_q scalar given as a raw vector."""
        q = self.ctx.qctx
        return PiAdic(self.ctx, tuple(q.vmul(a, vec) for a in self.coeffs))

    def __mul__(self, other: "PiAdic") -> "PiAdic":
        q = self.ctx.qctx
        e = self.ctx.e
        prod = [q.vzero()] * (2 * e - 1)
        for i, a in enumerate(self.coeffs):
            if any(a):
                for j, b in enumerate(other.coeffs):
                    if any(b):
                        prod[i + j] = q.vadd(prod[i + j], q.vmul(a, b))
        for deg in range(2 * e - 2, e - 1, -1):
            c = prod[deg]
            if any(c):
                prod[deg - e] = q.vsub(prod[deg - e], q.vscale(c, q.p))
        return PiAdic(self.ctx, tuple(prod[:e]))

    def pi_valuation(self) -> int:
        """min over j of j + (p-1)*val_p(c_j); capped at (p-1)*N for 0."""
        q = self.ctx.qctx
        e = self.ctx.e
        best = e * q.n
        for j, c in enumerate(self.coeffs):
            v = j + e * q.vval(c)
            if v < best:
                best = v
        return best

    def leading_residue(self) -> int:
        """Residue in F_p of self / pi^v at v = pi_valuation (prime coefficients only)."""
        q = self.ctx.qctx
        if q.r != 1:
            raise ValueError("leading_residue needs prime-field coefficients")
        v = self.pi_valuation()
        j, l = v % self.ctx.e, v // self.ctx.e
        c = self.coeffs[j][0] // q.p ** l % q.p
        return (-c if l & 1 else c) % q.p

    def congruent(self, other: "PiAdic", pi_prec: int) -> bool:
        """Equality modulo pi^pi_prec."""
        q = self.ctx.qctx
        e = self.ctx.e
        for j in range(e):
            need = -(-(pi_prec - j) // e)
            if need <= 0:
                continue
            if need > q.n:
                raise PrecisionExhaustedError(
                    f"need {need} p-adic digits, context holds {q.n}")
            pk = q.p ** need
            for a, b in zip(self.coeffs[j], other.coeffs[j]):
                if (a - b) % pk:
                    return False
        return True

    def to_text(self, pi_prec: int) -> str:
        """Coefficient matrix of 1, pi, ..., pi^(p-2), each mod the p-power
        that pi^pi_prec still sees at that slot."""
        q = self.ctx.qctx
        e = self.ctx.e
        cols = []
        for j, c in enumerate(self.coeffs):
            need = max(-(-(pi_prec - j) // e), 0)
            pk = q.p ** min(need, q.n) if need else 1
            cols.append([x % pk for x in c])
        return f"pi-adic {cols} (mod pi^{pi_prec})"

    def __repr__(self):
        return f"PiAdic({[list(c) for c in self.coeffs]})"
