"""Finite-field layer: deterministic models, discrete logs, characters.

Run:  python demos/01_finite_fields.py
"""

from padichyper import build_field

# Fields are built deterministically: first irreducible modulus in lex order,
# first generator in base-p enumeration order.
for p, r in [(5, 1), (3, 2), (5, 2), (13, 2)]:
    field = build_field(p, r)
    print(f"F_{field.q}: modulus {list(field.modulus)}, "
          f"generator {list(field.generator.coeffs)}")

f25 = build_field(5, 2)
x = f25.elem((1, 2))            # 1 + 2u where u is the adjoined root
print("\nelement x =", list(x.coeffs), "in F_25")
print("dlog(x) =", f25.dlog(x))
print("x^24 == 1:", x ** 24 == f25.one)
print("quadratic character of x:", f25.quad_char(x))
print("trace to F_5:", f25.trace(x))

# The quadratic character is multiplicative and -1 exactly on non-squares.
squares = {(u * u).code for u in f25.units()}
assert all((f25.quad_char(u) == 1) == (u.code in squares) for u in f25.units())
print("\nquadratic character matches the brute-force square table")

# Character values are handled as exponents m * dlog(x) mod q-1; the zero
# element is flagged separately (characters vanish there).
print("char_exponent(m=3, x):", f25.char_exponent(3, x))
print("char_exponent(m=3, 0):", f25.char_exponent(3, f25.zero))
