"""Trinomial curves: brute-force points versus the closed-form prediction.

Run:  python demos/05_curve_counts.py
"""

from padichyper import (
    CurveFamily,
    build_field,
    count_curve_points,
    count_trinomial_roots,
    predicted_curve_points,
    predicted_root_count,
)

f11 = build_field(11, 1)

print("y^2 = x^d + a x + b over F_11, brute force vs closed form:\n")
print(" d  a  b   points   prediction")
for d in (3, 4, 5):
    for a_code, b_code in [(1, 1), (2, 7), (9, 4)]:
        a, b = f11.from_code(a_code), f11.from_code(b_code)
        fam = CurveFamily(d, a, b, "linear")
        truth = count_curve_points(f11, fam)
        pred = predicted_curve_points(f11, fam, 4)
        ok = pred.eq_at(pred.ctx.integer(truth), 4)
        print(f" {d}  {a_code}  {b_code}   {truth:4d}     {pred.to_text()}  {'ok' if ok else 'MISMATCH'}")

print("\ndistinct roots of x^d + a x^(d-1) + b over F_169:")
f169 = build_field(13, 2)
a = f169.elem((1, 1))
b = f169.elem((3, 0))
for d in (3, 4, 5):
    truth = count_trinomial_roots(f169, d, a, b, "subleading")
    pred = predicted_root_count(f169, d, a, b, "subleading", 4)
    ok = pred.eq_at(pred.ctx.integer(truth), 4)
    print(f" d={d}: {truth} roots; prediction {pred.to_text()}  {'ok' if ok else 'MISMATCH'}")
