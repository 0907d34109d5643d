"""
Exact coefficient comparison
============================

At rational x both sides of a corollary expand into power series in t with
rational coefficients, so the check becomes literal equality.
"""

from fractions import Fraction

from hsl.identities import coefficient_check, get_identity, run_suite

r = coefficient_check("cor9", {"p": 2, "x": Fraction(1, 3)}, 10)
print("lhs:", [str(c) for c in r.lhs])
print("rhs:", [str(c) for c in r.rhs])
print("equal:", r.lhs == r.rhs)

# The purely combinatorial identities only have an exact mode.
print(get_identity("landen").description)

# A small seeded suite over every exact check.
reports = run_suite(modes=("exact",), seed=1, trials=2)
print(f"{sum(r.passed for r in reports)}/{len(reports)} exact checks passed")
