"""
Mehler's formula and its shifted form
=====================================

Sum H_n(x) H_n(z) t^n / n! has a closed form.  Shifting the expansion point
by y changes every term on the right but not the value.
"""

from hsl.identities import mehler_check, mehler_closed_form

x, z, t = 0.2, 0.4, 0.1
print("closed form:", mehler_closed_form(x, z, t))

r = mehler_check(x, z, t, 40)
print(f"series:      {r.lhs}   rel={r.residual_rel:.1e}")

for y in (0.0, 0.1, 0.3):
    s = mehler_check(x, z, t, 40, y=y)
    print(f"y={y}: shifted sum {s.lhs}   abs={s.residual_abs:.1e}  tail={s.tail_estimate:.1e}")
