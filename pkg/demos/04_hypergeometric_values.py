"""Evaluating the p-adic hypergeometric sum; special values and transforms.

Run:  python demos/04_hypergeometric_values.py
"""

from fractions import Fraction as Fr

from padichyper import build_field, hyper_evaluator, hyper_sum
from padichyper.hyper import HyperParams, canonical

f5 = build_field(5, 1)

# The binary sum with parameters (0, 1/2; 1/6, 5/6) at t = 1 collapses to the
# quadratic character of 3.
hv = hyper_sum(f5, [Fr(0), Fr(1, 2)], [Fr(1, 6), Fr(5, 6)], f5.one, 6)
print("value at t=1 over F_5:", hv.value.to_text())
print("phi(3) =", f5.quad_char(f5.from_int(3)), " (so the value is -1)")
print("guaranteed absolute digits:", hv.guaranteed_prec)

# Values depend only on the fractional parts of the parameters, in any order.
raw = HyperParams((Fr(13, 6), Fr(1, 2)), (Fr(-1, 4), Fr(0)))
print("\ncanonical form of", raw.upper, raw.lower, "->",
      canonical(raw).upper, canonical(raw).lower)

# An evaluator amortises the gamma/floor work across many arguments.
f13 = build_field(13, 1)
ev = hyper_evaluator(f13, HyperParams((Fr(1, 4), Fr(3, 4)), (Fr(1, 3), Fr(2, 3))), 4)
ev6 = hyper_evaluator(f13, HyperParams((Fr(1, 4), Fr(3, 4)), (Fr(1, 6), Fr(5, 6))), 4)
print("\nlower-parameter switch over F_13 (argument z = -27 b^2 / 4a^3):")
for a_code, b_code in [(1, 1), (2, 5), (7, 3)]:
    a, b = f13.from_code(a_code), f13.from_code(b_code)
    z = f13.from_int(-27) * b * b / (f13.from_int(4) * a ** 3)
    if z == f13.one:
        print(f"  a={a_code} b={b_code}: argument 1, excluded")
        continue
    lhs = ev.value_at(z).value
    rhs = f13.quad_char(-a) * ev6.value_at(z).value
    print(f"  a={a_code} b={b_code}: {lhs.to_text()}  ==  {rhs.to_text()}:",
          lhs.eq_at(rhs, 4))
