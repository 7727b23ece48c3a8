"""Finite fields F_q = F_{p^r} with table-driven discrete logs and characters.

Construction is deterministic: the modulus is the first monic irreducible
polynomial in ascending lexicographic order of its coefficient tuple
(c_{r-1}, ..., c_0), and the generator is the first element of multiplicative
order q - 1 when elements are enumerated by their base-p integer code
sum(c_i * p^i).  A complete dlog table is built up front (q is capped at
2^20), so powers, inverses and character exponents are O(1) lookups.

A field is immutable once built; every operation is a pure read, safe for
concurrent shared use.  Multiplicative characters are handled as exponents
(an integer mod q-1, or None at 0), leaving the choice of root-of-unity
embedding to the consumer.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InvalidFieldError

#: Largest supported field size; full log/exp tables are kept in memory.
Q_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over Z/p (coefficient lists, low degree first)

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)

def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    # f monic
    a = a[:]
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        c = a[-1]
        if c:
            off = len(a) - 1 - df
            for j in range(df + 1):
                a[off + j] = (a[off + j] - c * f[j]) % p
        a.pop()
    return _ptrim(a)


def _ppowmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    b = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, b, p), f, p)
        b = _pmod(_pmul(b, b, p), f, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _ptrim(a[:]), _ptrim(b[:])
    while b:
        inv = pow(b[-1], -1, p)
        bm = [c * inv % p for c in b]
        a, b = b, _pmod(a, bm, p)
    return a


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    return _ptrim(out)


def _is_irreducible(f: list[int], p: int, r: int) -> bool:
    # monic f of degree r is irreducible iff x^(p^r) == x mod f and
    # gcd(x^(p^(r/ell)) - x, f) = 1 for every prime ell | r
    if r == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p ** r, f, p), x, p):
        return False
    for ell in _prime_factors(r):
        diff = _psub(_ppowmod(x, p ** (r // ell), f, p), x, p)
        g = _pgcd(f, diff, p)
        if len(g) - 1 > 0:
            return False
    return True


# ---------------------------------------------------------------------------

class FqElem:
    """Element of a FiniteField, identified by its base-p integer code."""

    __slots__ = ("field", "code")

    def __init__(self, field: "FiniteField", code: int):
        self.field = field
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficient vector (c_0, ..., c_{r-1}) of the polynomial representative."""
        p, r, c = self.field.p, self.field.r, self.code
        out = []
        for _ in range(r):
            c, d = divmod(c, p)
            out.append(d)
        return tuple(out)

    def _coerce(self, other):
        if isinstance(other, FqElem):
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.field._add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.field._add(self, -o)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        f = self.field
        p = f.p
        return f.elem(tuple((-c) % p for c in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        f = self.field
        if self.code == 0 or o.code == 0:
            return f.zero
        return f.exp_elem((f.log[self.code] + f.log[o.code]) % (f.q - 1))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self) -> "FqElem":
        f = self.field
        if self.code == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return f.exp_elem((-f.log[self.code]) % (f.q - 1))

    def __pow__(self, k: int) -> "FqElem":
        f = self.field
        if self.code == 0:
            if k < 0:
                raise ZeroDivisionError("negative power of 0 in F_q")
            return f.one if k == 0 else f.zero
        return f.exp_elem((f.log[self.code] * k) % (f.q - 1))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.code == other.code and self.field.signature == other.field.signature

    def __hash__(self):
        return hash((self.code, self.field.signature))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"FqElem({list(self.coeffs)} over F_{self.field.q})"


class FiniteField:
    """Concrete model of F_{p^r}: modulus, generator and full dlog table."""

    def __init__(self, p: int, r: int, modulus: tuple[int, ...] | None = None):
        if p == 2 or not is_prime(p):
            raise InvalidFieldError(f"p must be an odd prime, got {p}")
        if r < 1:
            raise InvalidFieldError(f"extension degree must be >= 1, got {r}")
        q = p ** r
        if q > Q_LIMIT:
            raise InvalidFieldError(f"q = {q} exceeds supported limit {Q_LIMIT}")
        self.p, self.r, self.q = p, r, q
        if modulus is None:
            modulus = self._first_irreducible(p, r)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != r + 1 or modulus[r] != 1:
                raise InvalidFieldError("modulus must be monic of degree r")
            if not _is_irreducible(list(modulus), p, r):
                raise InvalidFieldError("modulus is reducible mod p")
        self.modulus = modulus
        self.signature = (p, r, modulus)
        self._build_tables()
        self._caches: dict = {}  # internal memo space (teichmuller tables etc.)

    @staticmethod
    def _first_irreducible(p: int, r: int) -> tuple[int, ...]:
        # lex order on (c_{r-1}, ..., c_0) == numeric order of sum(c_i p^i)
        for t in range(p ** r):
            coeffs = []
            tt = t
            for _ in range(r):
                tt, d = divmod(tt, p)
                coeffs.append(d)
            f = coeffs + [1]
            if _is_irreducible(f, p, r):
                return tuple(f)
        raise InvalidFieldError("no irreducible polynomial found")  # unreachable

    def _build_tables(self):
        p, r, q = self.p, self.r, self.q
        f = list(self.modulus)

        def encode(poly: list[int]) -> int:
            c = 0
            for d in reversed(poly):
                c = c * p + d
            return c

        def decode(code: int) -> list[int]:
            out = []
            for _ in range(r):
                code, d = divmod(code, p)
                out.append(d)
            return out

        factors = _prime_factors(q - 1)
        gen_code = None
        for cand in range(1, q):
            poly = _ptrim(decode(cand))
            if all(encode(_ptrim(_ppowmod(poly, (q - 1) // ell, f, p)) + [0]) != 1
                   for ell in factors):
                # none of the proper-power tests hit 1 => order is exactly q-1
                if encode(_ppowmod(poly, q - 1, f, p)) == 1:
                    gen_code = cand
                    break
        if gen_code is None:
            raise InvalidFieldError("no generator found")  # unreachable

        exp = [0] * (q - 1)
        log = [-1] * q
        cur = [1]
        gpoly = _ptrim(decode(gen_code))
        for e in range(q - 1):
            code = encode(cur + [0] * (r - len(cur)))
            exp[e] = code
            log[code] = e
            cur = _pmod(_pmul(cur, gpoly, p), f, p)
        if encode(cur + [0] * (r - len(cur))) != 1:
            raise InvalidFieldError("generator order check failed")  # unreachable
        self.exp = exp
        self.log = log
        self.generator = FqElem(self, gen_code)
        self.zero = FqElem(self, 0)
        self.one = FqElem(self, 1)

    # -- element constructors ------------------------------------------------

    def elem(self, coeffs) -> FqElem:
        p = self.p
        code = 0
        cs = list(coeffs)
        if len(cs) > self.r:
            raise ValueError("coefficient vector longer than extension degree")
        for d in reversed(cs):
            code = code * p + (d % p)
        return FqElem(self, code)

    def from_code(self, code: int) -> FqElem:
        if not 0 <= code < self.q:
            raise ValueError(f"element code out of range [0, {self.q})")
        return FqElem(self, code)

    def from_int(self, n: int) -> FqElem:
        return FqElem(self, n % self.p)

    def from_rational(self, x: Fraction) -> FqElem:
        """Image of a rational with p-coprime denominator in the prime subfield."""
        den = x.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
        return self.from_int(x.numerator) / self.from_int(x.denominator)

    def elements(self):
        return (FqElem(self, c) for c in range(self.q))

    def units(self):
        return (FqElem(self, c) for c in range(1, self.q))

    def exp_elem(self, e: int) -> FqElem:
        return FqElem(self, self.exp[e % (self.q - 1)])

    # -- queries ---------------------------------------------------------------

    def _add(self, x: FqElem, y: FqElem) -> FqElem:
        p = self.p
        cx, cy, code, mult = x.code, y.code, 0, 1
        for _ in range(self.r):
            cx, dx = divmod(cx, p)
            cy, dy = divmod(cy, p)
            code += ((dx + dy) % p) * mult
            mult *= p
        return FqElem(self, code)

    def dlog(self, x: FqElem) -> int:
        """Discrete log base the field generator; error at 0."""
        if x.code == 0:
            raise ZeroDivisionError("dlog of 0 is undefined")
        return self.log[x.code]

    def quad_char(self, x: FqElem) -> int:
        """Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise."""
        if x.code == 0:
            return 0
        return -1 if self.log[x.code] & 1 else 1

    def trace(self, x: FqElem) -> int:
        """Absolute trace to F_p, returned as an integer in [0, p)."""
        if x.code == 0:
            return 0
        acc = self.zero
        e = self.log[x.code]
        pk = 1
        for _ in range(self.r):
            acc = self._add(acc, self.exp_elem(e * pk))
            pk *= self.p
        return acc.code % self.p

    def char_exponent(self, m: int, x: FqElem) -> int | None:
        """Exponent form of the m-th character: None at 0, else m*dlog(x) mod q-1."""
        if x.code == 0:
            return None
        return (m * self.log[x.code]) % (self.q - 1)

    def frobenius(self, x: FqElem, i: int = 1) -> FqElem:
        if x.code == 0:
            return self.zero
        return self.exp_elem(self.log[x.code] * pow(self.p, i, self.q - 1))

    def sqrt(self, x: FqElem) -> FqElem | None:
        """A square root of x, or None if x is not a square (0 maps to 0)."""
        if x.code == 0:
            return self.zero
        e = self.log[x.code]
        if e & 1:
            return None
        return self.exp_elem(e // 2)

    def serialize(self) -> dict:
        """Header form used in JSON reports."""
        return {
            "p": self.p,
            "r": self.r,
            "q": self.q,
            "modulus": list(self.modulus),
            "generator": list(self.generator.coeffs),
        }

    def __repr__(self):
        return f"FiniteField(p={self.p}, r={self.r}, modulus={list(self.modulus)})"


@lru_cache(maxsize=None)
def _cached_field(p: int, r: int) -> FiniteField:
    return FiniteField(p, r)


def build_field(p: int, r: int, modulus=None) -> FiniteField:
    """Deterministic F_{p^r}; repeated calls with the same (p, r) share one model."""
    if modulus is not None:
        return FiniteField(p, r, tuple(modulus))
    return _cached_field(p, r)
