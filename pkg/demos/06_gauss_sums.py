"""The two Gauss-sum oracles: complex embedding and the pi-adic ring.

Run:  python demos/06_gauss_sums.py
"""

import math

from padichyper import (
    build_field,
    check_davenport_hasse,
    check_gauss_lemmas,
    check_gross_koblitz,
    gauss_sum_complex,
    gross_koblitz_sides,
    zeta_p_piadic,
)

f13 = build_field(13, 1)
print("complex Gauss sums over F_13:")
print("  G(trivial) =", gauss_sum_complex(f13, 0))
g6 = gauss_sum_complex(f13, 6)     # the quadratic character
print("  G(quadratic) =", g6, " |G| =", abs(g6), " sqrt(13) =", math.sqrt(13))

report = check_gauss_lemmas(f13, 1e-8)
print("  all classical identities, max deviation:", report["max_deviation"])
print("  Davenport-Hasse k=2, every twist:",
      all(check_davenport_hasse(f13, 2, psi) for psi in range(12)))
print("  Davenport-Hasse k=3, every twist:",
      all(check_davenport_hasse(f13, 3, psi) for psi in range(12)))

# pi-adic side: zeta_p is lifted so that zeta = 1 + pi mod pi^2.
z = zeta_p_piadic(5, 12)
print("\nzeta_5 in Z_5[pi]/(pi^4 + 5):", z.to_text(8))

f25 = build_field(5, 2)
lhs, rhs = gross_koblitz_sides(f25, 7, 12)
print("\nGauss sum vs gamma product over F_25, index 7, mod pi^12:")
print("  gauss side:", lhs.to_text(12))
print("  gamma side:", rhs.to_text(12))
print("  congruent:", lhs.congruent(rhs, 12))
print("  every index 0..23:",
      all(check_gross_koblitz(f25, a, 12) for a in range(24)))
