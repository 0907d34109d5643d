"""
Checking the Hermite series corollaries numerically
===================================================

Every corollary equates a weighted Hermite series at x with a Gaussian
factor times a series in H_n(x - t).  We sum both sides to N = 40 terms.
"""

from hsl.identities import corollary_check, corollary_generic_check

X, T = 0.3, 0.1
points = {
    "cor1": {}, "cor2": {}, "cor3": {}, "cor4": {}, "cor5": {},
    "cor6": {"z": 0.5}, "cor7": {"z": 0.5}, "cor8": {"z": 0.5, "y": 0.3},
    "cor9": {"p": 3}, "cor10": {"alpha": 1 + 1j},
}

for cid, params in points.items():
    r = corollary_check(cid, params, X, T, 40)
    print(f"{cid:6} lhs={r.lhs:.15g}  abs={r.residual_abs:.1e}  tail={r.tail_estimate:.1e}  {r.passed}")

# The generic transformation reaches the same numbers from the underlying sequence.
direct = corollary_check("cor4", {}, X, T)
generic = corollary_generic_check("cor4", {}, X, T)
print("cor4 direct vs generic:", direct.lhs, generic.lhs)

# Truncation error shrinks with the order.
for n in (10, 20, 40):
    print(f"N={n:2}  residual={corollary_check('cor2', {}, X, T, n).residual_abs:.2e}")
