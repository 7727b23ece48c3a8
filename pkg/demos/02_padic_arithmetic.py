"""Fixed-precision p-adic values, Teichmueller lifts, the pi-adic ring.

Run:  python demos/02_padic_arithmetic.py
"""

from fractions import Fraction

from padichyper import (
    PiAdicContext,
    build_field,
    embed_rational,
    get_context,
    teichmuller,
)

field = build_field(5, 1)
ctx = get_context(field, 4)        # work modulo 5^4

two = ctx.integer(2)
print("2         ->", two.to_text())
print("2 + 3     ->", (two + 3).to_text(), "  (valuation jumps, one digit lost)")
print("1/2       ->", embed_rational(Fraction(1, 2), ctx).to_text())
print("5/3       ->", embed_rational(Fraction(5, 3), ctx).to_text())
print("inv(2)    ->", two.inv().to_text())

# Teichmueller lift: the unique (q-1)-th root of unity congruent to x mod p.
w = teichmuller(field, field.from_int(2), 4)
print("\nomega(2) mod 5^4 =", w.to_text())
print("omega(2)^4       =", (w * w * w * w).to_text())

# Unramified extension: values carry coefficient vectors.
f25 = build_field(5, 2)
ctx25 = get_context(f25, 4)
u = teichmuller(f25, f25.elem((1, 2)), 4)
print("\nomega(1 + 2u) in Z_25:", u.to_text())
print("reduces back to      :", list(u.residue_mod_p().coeffs))

# The ramified ring adjoins pi with pi^(p-1) = -p.
pic = PiAdicContext(ctx)
pi = pic.pi_power(1)
print("\npi^4 =", (pi * pi * pi * pi).to_text(8), " (equals -5)")
