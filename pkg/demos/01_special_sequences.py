"""
Hermite polynomials, harmonic numbers and Stirling functions
============================================================

The building blocks every identity in the package is made of.
"""

from fractions import Fraction

from hsl import harmonic, hermite_eval, hermite_poly, hermite_rodrigues_oracle, stirling_function

# Coefficients from the three-term recurrence, lowest degree first.
for n in range(6):
    print(f"H_{n}(x) coeffs:", hermite_poly(n).coeffs)

# The recurrence agrees with repeated differentiation of exp(-x^2).
assert all(hermite_poly(n) == hermite_rodrigues_oracle(n) for n in range(20))

# Evaluation stays exact on rationals and works on floats too.
print("H_5(1/3) =", hermite_eval(5, Fraction(1, 3)))
print("H_5(0.3) =", hermite_eval(5, 0.3))

# Harmonic numbers come back as exact fractions.
print("H_1..H_6:", [str(harmonic(k)) for k in range(1, 7)])
print("H_4^(2) =", harmonic(4, order=2))

# For integer order the Stirling function is the classical S(m, n) ...
print("S(5, n):", [str(stirling_function(5, n)) for n in range(6)])
# ... and it keeps going for fractional and complex order.
print("S(1/2, 3) =", stirling_function(0.5, 3))
print("S(1+i, 2) =", stirling_function(1 + 1j, 2))
