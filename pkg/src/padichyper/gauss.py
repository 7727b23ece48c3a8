"""Two independent Gauss-sum oracles.

The complex oracle realises the characters as literal roots of unity,
T^m(x) = exp(2 pi i m dlog(x)/(q-1)) and theta(x) = exp(2 pi i tr(x)/p), and
checks the classical identities (conjugate-pair product, theta expansion,
additivity, Davenport-Hasse) by toleranced floating-point comparison.  It
touches no p-adic code at all.

The pi-adic oracle works in Z_q[pi]/(pi^(p-1) + p).  A primitive p-th root
of unity with zeta = 1 + pi mod pi^2 is lifted digit by digit (Newton is
avoided: all roots of the p-th cyclotomic polynomial are congruent mod pi,
so plain digit lifting is the stable choice), and the Gauss sum of an
inverse-Teichmueller power is compared against the explicit pi-power times
the product of p-adic gamma values.  It touches no floating point at all.

The two oracles share only the finite-field layer.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import UnsupportedConfigurationError
from .ff import FiniteField
from .gammap import padic_gamma
from .padic import PiAdic, PiAdicContext, get_context, teichmuller_powers

TOL = 1e-8


# ---------------------------------------------------------------------------
# complex embedding

def _theta_by_exponent(field: FiniteField) -> np.ndarray:
    """theta(g^e) for e in [0, q-1)."""
    tr = np.array([field.trace(field.exp_elem(e)) for e in range(field.q - 1)])
    return np.exp(2j * np.pi * tr / field.p)


def gauss_sum_table(field: FiniteField) -> np.ndarray:
    """G[m] = sum_x T^m(x) theta(x) for every m in [0, q-1), one FFT."""
    cache = field._caches.get("gauss_table")
    if cache is None:
        theta = _theta_by_exponent(field)
        # G_m = sum_e theta_e exp(+2 pi i m e/(q-1)) = (q-1) * ifft(theta)[m]
        cache = np.fft.ifft(theta) * (field.q - 1)
        field._caches["gauss_table"] = cache
    return cache


def gauss_sum_complex(field: FiniteField, m: int) -> complex:
    return complex(gauss_sum_table(field)[m % (field.q - 1)])


def character_value(field: FiniteField, m: int, x) -> complex:
    e = field.char_exponent(m, x)
    if e is None:
        return 0j
    return complex(np.exp(2j * np.pi * e / (field.q - 1)))


def check_gauss_lemmas(field: FiniteField, tol: float = TOL) -> dict:
    """Deviations for the classical Gauss/theta identities; all must be < tol.

    Keys: trivial_sum (G_0 = -1), conjugate_product (G_k G_-k = q T^k(-1)),
    theta_expansion, theta_additive, theta_total, magnitude (|G_m| = sqrt q).
    """
    q, p = field.q, field.p
    qm1 = q - 1
    G = gauss_sum_table(field)
    report: dict = {"q": q, "tol": tol}

    report["trivial_sum"] = abs(G[0] + 1)

    sign_at_minus1 = field.dlog(field.from_int(-1))  # = (q-1)/2
    dev = 0.0
    for k in range(1, qm1):
        tkm1 = np.exp(2j * np.pi * k * sign_at_minus1 / qm1)
        dev = max(dev, abs(G[k] * G[(-k) % qm1] - q * tkm1))
    report["conjugate_product"] = dev

    report["magnitude"] = max(abs(abs(G[m]) - math.sqrt(q)) for m in range(1, qm1)) \
        if qm1 > 1 else 0.0

    theta = _theta_by_exponent(field)
    # theta(alpha) = (1/(q-1)) sum_m G_-m T^m(alpha), summed directly
    gneg = np.concatenate(([G[0]], G[1:][::-1]))
    roots = np.exp(2j * np.pi * np.arange(qm1) / qm1)
    dev = 0.0
    for e in range(qm1):
        recon = np.dot(gneg, roots ** e) / qm1
        dev = max(dev, abs(theta[e] - recon))
    report["theta_expansion"] = dev

    zp = [complex(np.exp(2j * np.pi * s / p)) for s in range(p)]
    tr = [field.trace(x) for x in field.elements()]
    dev = 0.0
    for a in field.elements():
        ta = zp[tr[a.code]]
        for b in field.elements():
            d = abs(zp[field.trace(a + b)] - ta * zp[tr[b.code]])
            if d > dev:
                dev = d
    report["theta_additive"] = dev

    report["theta_total"] = abs(sum(zp[t] for t in tr))

    report["max_deviation"] = max(v for k, v in report.items()
                                  if k not in ("q", "tol"))
    report["ok"] = report["max_deviation"] < tol
    return report


def check_davenport_hasse(field: FiniteField, k: int, psi_index: int,
                          tol: float = TOL) -> bool:
    """prod_{chi^k = eps} G(chi psi) = -G(psi^k) psi(k^-k) prod G(chi)."""
    q = field.q
    qm1 = q - 1
    if qm1 % k:
        raise UnsupportedConfigurationError(f"q = {q} is not 1 mod k = {k}")
    G = gauss_sum_table(field)
    step = qm1 // k
    lhs = np.prod([G[(psi_index + c * step) % qm1] for c in range(k)])
    kk = field.from_int(k) ** (-k)
    psi_at = character_value(field, psi_index, kk)
    rhs = -G[(k * psi_index) % qm1] * psi_at * np.prod([G[c * step] for c in range(k)])
    return abs(lhs - rhs) < tol


# ---------------------------------------------------------------------------
# pi-adic oracle

_zeta_cache: dict = {}


def zeta_p_piadic(p: int, pi_prec: int, ndigits: int | None = None) -> PiAdic:
    """The primitive p-th root of unity with zeta = 1 + pi mod pi^2.

    Lifted digit by digit in Z_p[pi]/(pi^(p-1) + p); the result satisfies
    Phi_p(zeta) = 0 mod pi^pi_prec and is cached per (p, pi_prec, ndigits).
    """
    from .ff import build_field

    if pi_prec < 2:
        raise ValueError("pi precision must be >= 2")
    e = p - 1
    need = -(-(pi_prec + 2 * p) // e) + 2
    if ndigits is None:
        ndigits = need
    ndigits = max(ndigits, need)
    key = (p, pi_prec, ndigits)
    got = _zeta_cache.get(key)
    if got is not None:
        return got

    ctx = get_context(build_field(p, 1), ndigits)
    pic = PiAdicContext(ctx)
    one = pic.one()

    def phi_at(z: PiAdic) -> PiAdic:
        acc = one
        for _ in range(p - 1):
            acc = acc * z + one
        return acc

    def phi_deriv_at(z: PiAdic) -> PiAdic:
        acc = pic.from_scalar(ctx.vint(p - 1))
        for s in range(p - 2, 0, -1):
            acc = acc * z + pic.from_scalar(ctx.vint(s))
        return acc

    z = one + pic.pi_power(1)
    du = phi_deriv_at(z)
    assert du.pi_valuation() == p - 2
    u = du.leading_residue()
    uinv = pow(u, -1, p)
    for k in range(2, pi_prec):
        f = phi_at(z)
        fv = f.pi_valuation()
        if fv >= k + p - 1:
            continue
        if fv != k + p - 2:
            raise ArithmeticError("cyclotomic digit lift lost track of the root")
        digit = (-f.leading_residue() * uinv) % p
        j, l = k % e, k // e
        bump = [ctx.vzero()] * e
        bump[j] = ctx.vint(digit * pow(-1, l) * p ** l)
        z = z + PiAdic(pic, tuple(bump))
    final = phi_at(z)
    if final.pi_valuation() < min(pi_prec, e * ndigits - p):
        raise ArithmeticError("cyclotomic lift failed verification")
    _zeta_cache[key] = z
    return z


def gross_koblitz_sides(field: FiniteField, a: int,
                        pi_prec: int = 12) -> tuple[PiAdic, PiAdic]:
    """Both sides of the Gauss-sum/gamma-product identity for wbar^a.

    Left: the pi-adic Gauss sum sum_x wbar^a(x) zeta^tr(x) with the zeta_p
    tied to pi by zeta = 1 + pi mod pi^2 (any other primitive root would
    require re-normalising pi).  Right: -pi^((p-1) sum_i <a p^i/(q-1)>)
    times the product of gamma values along the Frobenius orbit.
    """
    p, r, q = field.p, field.r, field.q
    if not 0 <= a <= q - 2:
        raise ValueError("character index out of range")
    e = p - 1
    ndigits = -(-pi_prec // e) + r + 3
    zeta_small = zeta_p_piadic(p, pi_prec + p, ndigits)
    ctx = get_context(field, ndigits)
    pic = PiAdicContext(ctx)
    zeta = pic.embed(zeta_small)

    zpow = [pic.one()]
    for _ in range(p - 1):
        zpow.append(zpow[-1] * zeta)

    W = teichmuller_powers(field, ndigits)
    qm1 = q - 1
    trace_sums = [ctx.vzero() for _ in range(p)]
    for exp in range(qm1):
        s = field.trace(field.exp_elem(exp))
        trace_sums[s] = ctx.vadd(trace_sums[s], W[(-a * exp) % qm1])
    lhs = pic.zero()
    for s in range(p):
        if any(trace_sums[s]):
            lhs = lhs + zpow[s].scale(trace_sums[s])

    gamma = padic_gamma(p, ndigits)
    gprod = 1
    esum = Fraction(0)
    for i in range(r):
        fr = Fraction((a * p ** i) % qm1, qm1)
        esum += fr
        gprod = gprod * gamma.at(fr) % ctx.pn
    epow = (p - 1) * esum
    assert epow.denominator == 1
    rhs = pic.pi_power(int(epow)).scale(ctx.vint(-gprod))
    return lhs, rhs


def check_gross_koblitz(field: FiniteField, a: int, pi_prec: int = 12) -> bool:
    """Equality mod pi^pi_prec of the two sides from gross_koblitz_sides."""
    lhs, rhs = gross_koblitz_sides(field, a, pi_prec)
    return lhs.congruent(rhs, pi_prec)
