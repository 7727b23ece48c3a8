"""Morita's p-adic gamma: dense tables, the digit-block path, identities.

Run:  python demos/03_padic_gamma.py
"""

import time
from fractions import Fraction

from padichyper import build_field, build_gamma_table, gamma_p, padic_gamma
from padichyper.gammap import functional_equation_case, gamma_product_lemma_case

# The dense table stores gamma at every residue mod p^N.
table = build_gamma_table(5, 2)
print("gamma(1)  mod 25 =", table.values[1])
print("gamma(5)  mod 25 =", table.values[5], "  (= -(1*2*3*4))")
print("gamma(1/2) ->", gamma_p(table, Fraction(1, 2)).to_text())

# Reflection formula gamma(x) gamma(1-x) = (-1)^x0, exhaustively.
t = build_gamma_table(7, 3)
assert all(functional_equation_case(t, k)[0] == functional_equation_case(t, k)[1]
           for k in range(7 ** 3))
print("\nreflection formula holds for all residues mod 7^3")

# Beyond ~10^6 residues a table is out of the question; the evaluator switches
# to assembling the partial product from base-p digit blocks.
start = time.time()
big = padic_gamma(13, 12)          # modulus 13^12 ~ 2.3e13
v = big.at(Fraction(1, 3))
print(f"\ngamma(1/3) mod 13^12 = {v}   [{time.time() - start:.3f}s, no table]")

# Frobenius-orbit product identity over F_49 at digit precision 4.
f49 = build_field(7, 2)
lhs, rhs = gamma_product_lemma_case(f49, 11, 4)
print(f"orbit product over F_49, m=11: lhs={lhs} rhs={rhs} equal={lhs == rhs}")
