"""Special sequences and polynomial families.

Everything here is a pure function of its arguments.  Rational inputs
(``int`` or :class:`fractions.Fraction`) give exact results; ``float`` and
``complex`` inputs give floating results.  Hermite evaluation is generic: any
object supporting ``+``, ``-`` and multiplication by integers works as the
argument, which is how :mod:`hsl.fps` expands ``H_n(x - t)`` as a series in t.

Naming: ``hermite_*`` always refers to the Hermite polynomials and
``harmonic`` to the harmonic numbers.  The two share a letter in the
literature; here they never do.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Number
from typing import Any, Callable, Mapping

from .errors import CapacityError, DomainError, UsageError

DEGREE_CAP = 512
RODRIGUES_CAP = 64
HARMONIC_CAP = 10**5


def is_exact(v: Any) -> bool:
    """True for ints (not bools) and Fractions."""
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


def as_exact(v):
    if isinstance(v, Fraction):
        return v
    if is_exact(v):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise UsageError(f"{v!r} is not a rational value")


def _check_cap(n: int, cap: int, what: str) -> None:
    if n < 0:
        raise DomainError(f"{what}: degree must be nonnegative, got {n}")
    if n > cap:
        raise CapacityError(f"{what}: degree {n} exceeds cap {cap}")


def _lift(x):
    # ints become Fractions so that divisions downstream stay exact
    return Fraction(x) if is_exact(x) else x


# ---------------------------------------------------------------- Hermite


@dataclass(frozen=True)
class HermitePoly:
    """Integer coefficients of a Hermite polynomial, lowest degree first."""

    degree: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coeffs must have length degree + 1")

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def hermite_sequence(n: int, x, cap: int = DEGREE_CAP) -> list:
    """Return ``[H_0(x), ..., H_n(x)]`` by the three-term recurrence.

    ``H_{k+1} = 2x H_k - 2k H_{k-1}``.  ``x`` may be any ring-like object
    closed under addition and integer scaling (numbers, truncated series).
    """
    _check_cap(n, cap, "hermite")
    x = _lift(x)
    h_prev = 0 * x + 1
    out = [h_prev]
    if n == 0:
        return out
    two_x = 2 * x
    h = two_x
    out.append(h)
    for k in range(1, n):
        h_prev, h = h, two_x * h - (2 * k) * h_prev
        out.append(h)
    return out


def hermite_eval(n: int, x, cap: int = DEGREE_CAP):
    """``H_n(x)`` (physicists' normalization, leading coefficient ``2**n``)."""
    return hermite_sequence(n, x, cap)[-1]


def hermite_poly(n: int, cap: int = DEGREE_CAP) -> HermitePoly:
    """Coefficients of ``H_n`` from the three-term recurrence on integer lists."""
    _check_cap(n, cap, "hermite")
    prev: list[int] = [1]
    if n == 0:
        return HermitePoly(0, (1,))
    cur: list[int] = [0, 2]
    for k in range(1, n):
        nxt = [0] + [2 * c for c in cur]
        for j, c in enumerate(prev):
            nxt[j] -= 2 * k * c
        prev, cur = cur, nxt
    return HermitePoly(n, tuple(cur))


def hermite_rodrigues_oracle(n: int) -> HermitePoly:
    """Independent oracle for ``H_n`` coefficients.

    Iterates ``P_0 = 1``, ``P_{k+1} = 2x P_k - P_k'`` over integer
    polynomials, i.e. ``(-1)^k e^{x^2} (d/dx)^k e^{-x^2}`` with the Gaussian
    factored out.  Shares no code with :func:`hermite_poly`.
    """
    _check_cap(n, RODRIGUES_CAP, "hermite_rodrigues_oracle")
    p = [1]
    for _ in range(n):
        shifted = [0] + [2 * c for c in p]
        deriv = [j * p[j] for j in range(1, len(p))]
        p = [s - (deriv[j] if j < len(deriv) else 0) for j, s in enumerate(shifted)]
    return HermitePoly(n, tuple(p))


# ---------------------------------------------------------------- Laguerre


def laguerre_eval(n: int, z, cap: int = DEGREE_CAP):
    """``L_n(z) = sum_k C(n,k) (-1)^k z^k / k!``; exact for rational z."""
    _check_cap(n, cap, "laguerre")
    z = _lift(z)
    total = 0 * z
    term = 0 * z + 1  # C(n,k) (-z)^k / k!
    for k in range(n + 1):
        total = total + term
        if k < n:
            term = term * (-z) * (n - k) / ((k + 1) * (k + 1))
    return total


# ---------------------------------------------------------------- harmonic


def harmonic(n: int, order: int = 1) -> Fraction:
    """Exact ``sum_{j=1..n} 1/j**order``; ``harmonic(0, .) == 0``."""
    if order not in (1, 2):
        raise DomainError("harmonic order must be 1 or 2")
    if n < 0:
        raise DomainError("harmonic index must be nonnegative")
    if n > HARMONIC_CAP:
        raise CapacityError(f"harmonic index {n} exceeds {HARMONIC_CAP}")
    # accumulate over a common denominator, normalize once
    num, den = 0, 1
    for j in range(1, n + 1):
        d = j**order
        num, den = num * d + den, den * d
    return Fraction(num, den)


def harmonic_table(n: int, order: int = 1) -> list[Fraction]:
    """``[harmonic(0), ..., harmonic(n)]`` in one pass."""
    out = [Fraction(0)]
    acc = Fraction(0)
    for j in range(1, n + 1):
        acc += Fraction(1, j**order)
        out.append(acc)
    return out


# ---------------------------------------------------------------- binomials


def binom_general(p, n: int):
    """Falling-factorial binomial ``p (p-1) ... (p-n+1) / n!``."""
    if n < 0:
        raise DomainError("binom_general: n must be nonnegative")
    p = _lift(p)
    if is_exact(p):
        num = Fraction(1)
        for j in range(n):
            num *= p - j
        return num / math.factorial(n)
    acc = 1.0 + 0 * p
    for j in range(n):
        acc = acc * (p - j) / (j + 1)
    return acc


# ---------------------------------------------------------------- powers, Stirling


def _as_int(alpha):
    """The integer value of alpha if it is an exact integer, else None."""
    if is_exact(alpha) and Fraction(alpha).denominator == 1:
        return int(alpha)
    return None


def power_alpha(k: int, alpha):
    """``k**alpha`` as ``exp(alpha * ln k)`` with real ``ln k`` (k >= 1).

    Real alpha gives a float, complex alpha a complex.
    """
    if k < 1:
        raise DomainError("power_alpha needs k >= 1")
    lk = math.log(k)
    if isinstance(alpha, complex):
        return cmath.exp(alpha * lk)
    return math.exp(float(alpha) * lk)


def stirling_function(alpha, n: int):
    """Generalized Stirling number of the second kind.

    ``S(alpha, n) = (1/n!) sum_{k=1..n} C(n,k) (-1)^(n-k) k**alpha``; the k=0
    term is taken as 0.  Exact (a Fraction) for integer alpha, floating
    otherwise.
    """
    if n < 0:
        raise DomainError("stirling_function: n must be nonnegative")
    if alpha == 0:
        raise DomainError("stirling_function: alpha must be nonzero")
    m = _as_int(alpha)
    if m is not None:
        total = Fraction(0)
        for k in range(1, n + 1):
            sign = -1 if (n - k) % 2 else 1
            total += sign * math.comb(n, k) * Fraction(k) ** m
        return total / math.factorial(n)
    if is_exact(alpha):
        alpha = float(alpha)
    terms = [
        (-1 if (n - k) % 2 else 1) * math.comb(n, k) * power_alpha(k, alpha)
        for k in range(1, n + 1)
    ]
    return _fsum(terms) / math.factorial(n)


def _fsum(values):
    vals = list(values)
    if any(isinstance(v, complex) for v in vals):
        return complex(math.fsum(v.real for v in vals), math.fsum(v.imag for v in vals))
    return math.fsum(vals)


def check_finite(v) -> None:
    """Raise DomainError if a floating value is NaN or infinite."""
    if isinstance(v, complex):
        ok = cmath.isfinite(v)
    elif isinstance(v, float):
        ok = math.isfinite(v)
    else:
        ok = True
    if not ok:
        raise DomainError(f"non-finite value {v!r}")


# ---------------------------------------------------------------- sequences


def _seq_one(k, p, exact):
    return Fraction(1) if exact else 1.0


def _seq_inv_kp1(k, p, exact):
    return Fraction(1, k + 1) if exact else 1.0 / (k + 1)


def _seq_inv_k(k, p, exact):
    if k == 0:
        return Fraction(0) if exact else 0.0
    return Fraction(1, k) if exact else 1.0 / k


def _float_harmonic(k, order=1):
    return math.fsum(1.0 / j**order for j in range(1, k + 1))


def _seq_harmonic(k, p, exact):
    return harmonic(k) if exact else _float_harmonic(k)


def _seq_harmonic2(k, p, exact):
    return harmonic(k, 2) if exact else _float_harmonic(k, 2)


def _seq_harm_kp1(k, p, exact):
    return harmonic(k) / (k + 1) if exact else _float_harmonic(k) / (k + 1)


def _seq_harm_k(k, p, exact):
    if k == 0:
        return Fraction(0) if exact else 0.0
    return harmonic(k) / k if exact else _float_harmonic(k) / k


def _seq_exp_z(k, p, exact):
    z = p["z"]
    if exact:
        return as_exact(z) ** k / math.factorial(k)
    acc = 1.0 + 0 * z
    for j in range(1, k + 1):
        acc = acc * z / j
    return acc


def _seq_laguerre(k, p, exact):
    z = p["z"]
    return laguerre_eval(k, as_exact(z) if exact else z)


def _seq_hermite_scaled(k, p, exact):
    z, y = p["z"], p["y"]
    if y == 0:
        raise DomainError("hermite-scaled needs y != 0")
    if exact:
        z, y = as_exact(z), as_exact(y)
    return hermite_eval(k, z) / (2 * y) ** k


def _seq_binom_p(k, p, exact):
    pp = p["p"]
    if exact:
        return binom_general(as_exact(pp) + k, k)
    return binom_general(pp + k, k)


def _seq_power(k, p, exact):
    alpha = p["alpha"]
    if alpha == 0:
        raise DomainError("power sequence needs alpha != 0")
    if k == 0:
        return Fraction(0) if exact else 0.0
    if exact:
        return Fraction(k) ** _as_int(alpha)
    if is_exact(alpha):
        alpha = float(alpha)
    return power_alpha(k, alpha)


@dataclass(frozen=True)
class _Kind:
    params: tuple[str, ...]
    fn: Callable
    integer_params: tuple[str, ...] = ()


SEQUENCE_KINDS: dict[str, _Kind] = {
    "constant-one": _Kind((), _seq_one),
    "one-over-k-plus-1": _Kind((), _seq_inv_kp1),
    "one-over-k": _Kind((), _seq_inv_k),
    "harmonic": _Kind((), _seq_harmonic),
    "harmonic2": _Kind((), _seq_harmonic2),
    "harmonic-over-k-plus-1": _Kind((), _seq_harm_kp1),
    "harmonic-over-k": _Kind((), _seq_harm_k),
    "exp-z": _Kind(("z",), _seq_exp_z),
    "laguerre": _Kind(("z",), _seq_laguerre),
    "hermite-scaled": _Kind(("z", "y"), _seq_hermite_scaled),
    "binom-p": _Kind(("p",), _seq_binom_p),
    "power": _Kind(("alpha",), _seq_power, integer_params=("alpha",)),
}


@dataclass(frozen=True)
class SequenceSpec:
    """A named, parameterized coefficient sequence ``a_0, a_1, ...``.

    >>> SequenceSpec("one-over-k-plus-1").terms(3)
    [Fraction(1, 1), Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)]
    """

    kind: str
    params: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        spec = SEQUENCE_KINDS.get(self.kind)
        if spec is None:
            raise UsageError(
                f"unknown sequence kind {self.kind!r}; known: {', '.join(SEQUENCE_KINDS)}"
            )
        missing = set(spec.params) - set(self.params)
        extra = set(self.params) - set(spec.params)
        if missing or extra:
            raise UsageError(f"{self.kind}: expected params {spec.params}, got {tuple(self.params)}")
        if self.kind == "power" and self.params["alpha"] == 0:
            raise DomainError("power sequence needs alpha != 0")

    @property
    def exactness(self) -> bool:
        spec = SEQUENCE_KINDS[self.kind]
        for name in spec.params:
            v = self.params[name]
            if not (is_exact(v) or isinstance(v, str)):
                return False
            if name in spec.integer_params and _as_int(as_exact(v)) is None:
                return False
        return True

    def term(self, k: int, exact: bool | None = None):
        if exact is None:
            exact = self.exactness
        if exact and not self.exactness:
            raise UsageError(f"{self.kind} with {dict(self.params)} has no exact evaluation")
        params = self.params
        if not exact:
            params = {k_: _numeric(v) for k_, v in params.items()}
        return SEQUENCE_KINDS[self.kind].fn(k, params, exact)

    def terms(self, n: int, exact: bool | None = None) -> list:
        """Terms ``a_0..a_n``."""
        return [self.term(k, exact) for k in range(n + 1)]


def _numeric(v):
    if isinstance(v, (float, complex)):
        return v
    if isinstance(v, Number):
        return float(v)
    return float(as_exact(v))
