"""
Binomial and Euler transforms on truncated series
=================================================

The binomial transform is its own inverse, and the Euler transform with
lambda=1, mu=-1 computes it through series composition.
"""

from fractions import Fraction

from hsl.fps import TruncatedSeries, binomial_transform, catalog_series, euler_transform

# 1/k goes to minus the harmonic numbers.
a = [Fraction(0)] + [Fraction(1, k) for k in range(1, 8)]
b = binomial_transform(a)
print("bt(1/k):   ", [str(v) for v in b.values])

# Applying it again returns the original sequence.
print("bt(bt(a)): ", [str(v) for v in binomial_transform(b).values])

# The same numbers from (1/(1-t)) f(-t/(1-t)) with f = -log(1-t).
f = catalog_series("neg-log1m", order=7)
print("Euler:     ", [str(v) for v in euler_transform(f, 1, -1).coeffs])

# Series arithmetic is exact and truncates to the shorter operand.
g = TruncatedSeries([1, 1, 0, 0])
print("(1+t)^2 =", [str(c) for c in (g * g).coeffs])
