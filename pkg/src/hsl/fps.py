"""Truncated formal power series, binomial and Euler transforms, and a
catalog of named generating functions.

A :class:`TruncatedSeries` holds coefficients ``c_0..c_N`` of a series in t
together with its truncation order N.  Two coefficient fields exist:
``"exact"`` (Fractions) and ``"complex"`` (Python floats/complex).  Binary
operations on series of different order truncate to the smaller order, so
nothing past the valid prefix is ever produced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number
from typing import Any, Sequence

from .errors import DomainError, UsageError
from .kernels import SequenceSpec, binom_general, harmonic_table, is_exact

EXACT = "exact"
COMPLEX = "complex"


def _field_of(values) -> str:
    return EXACT if all(is_exact(v) for v in values) else COMPLEX


@dataclass(frozen=True, eq=True)
class TruncatedSeries:
    """Prefix ``coeffs[j]`` = coefficient of ``t**j`` for ``j <= order``."""

    coeffs: tuple
    field: str

    def __init__(self, coeffs: Sequence, field: str | None = None):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise UsageError("a truncated series needs at least one coefficient")
        if field is None:
            field = _field_of(coeffs)
        if field == EXACT:
            if not all(is_exact(c) for c in coeffs):
                raise UsageError("exact series with non-rational coefficient")
            coeffs = tuple(Fraction(c) for c in coeffs)
        elif field != COMPLEX:
            raise UsageError(f"unknown field {field!r}")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "field", field)

    # -- construction helpers

    @classmethod
    def zero(cls, order: int, field: str = EXACT) -> "TruncatedSeries":
        z = Fraction(0) if field == EXACT else 0.0
        return cls([z] * (order + 1), field)

    @classmethod
    def monomial(cls, c, power: int, order: int, field: str | None = None) -> "TruncatedSeries":
        if field is None:
            field = EXACT if is_exact(c) else COMPLEX
        out = list(cls.zero(order, field).coeffs)
        if power <= order:
            out[power] = c
        return cls(out, field)

    @classmethod
    def variable(cls, order: int, field: str = EXACT) -> "TruncatedSeries":
        """The series ``t``."""
        return cls.monomial(Fraction(1) if field == EXACT else 1.0, 1, order, field)

    # -- basic access

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j):
        return self.coeffs[j]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r}, field={self.field!r})"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise UsageError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], self.field)

    def to_complex(self) -> "TruncatedSeries":
        if self.field == COMPLEX:
            return self
        return TruncatedSeries([float(c) for c in self.coeffs], COMPLEX)

    # -- arithmetic

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            if other.field != self.field:
                raise UsageError(f"field mismatch: {self.field} vs {other.field}")
            return other
        if isinstance(other, Number):
            if self.field == EXACT and not is_exact(other):
                raise UsageError(f"field mismatch: {other!r} in exact series arithmetic")
            return TruncatedSeries.monomial(other, 0, self.order, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], self.field)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Number):
            if self.field == EXACT and not is_exact(other):
                raise UsageError(f"field mismatch: {other!r} in exact series arithmetic")
            return TruncatedSeries([c * other for c in self.coeffs], self.field)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        zero = self.coeffs[0] * 0
        out = [zero] * (n + 1)
        b = other.coeffs
        for i in range(n + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                if b[j]:
                    out[i + j] += a * b[j]
        return TruncatedSeries(out, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Number):
            return NotImplemented
        if self.field == EXACT and not is_exact(other):
            raise UsageError(f"field mismatch: {other!r} in exact series arithmetic")
        if self.field == EXACT:
            other = Fraction(other)
        return TruncatedSeries([c / other for c in self.coeffs], self.field)

    # -- structural operations

    def mul_t(self, power: int = 1) -> "TruncatedSeries":
        """Multiply by ``t**power``; the valid order grows by ``power``."""
        zero = self.coeffs[0] * 0
        return TruncatedSeries([zero] * power + list(self.coeffs), self.field)

    def div_t(self, power: int = 1) -> "TruncatedSeries":
        """Divide by ``t**power``; the leading ``power`` coefficients must vanish."""
        if power > self.order:
            raise DomainError("division by t exhausts the valid prefix")
        if any(self.coeffs[:power]):
            raise DomainError("series is not divisible by t**%d" % power)
        return TruncatedSeries(self.coeffs[power:], self.field)

    def rescale(self, c) -> "TruncatedSeries":
        """Coefficients of ``f(c t)``."""
        if self.field == EXACT and not is_exact(c):
            raise UsageError("field mismatch in rescale")
        out, p = [], c ** 0
        for a in self.coeffs:
            out.append(a * p)
            p = p * c
        return TruncatedSeries(out, self.field)


# ---------------------------------------------------------------- plain functions


def series_add(a: TruncatedSeries, b) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b) -> TruncatedSeries:
    return a * b


def series_scale(a: TruncatedSeries, c) -> TruncatedSeries:
    if isinstance(c, TruncatedSeries):
        raise UsageError("series_scale takes a scalar")
    return a * c


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """Coefficients of ``outer(inner(t))`` by Horner accumulation."""
    if outer.field != inner.field:
        raise UsageError(f"field mismatch: {outer.field} vs {inner.field}")
    if inner.coeffs[0] != 0:
        raise DomainError("composition needs an inner series with zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = TruncatedSeries.monomial(outer.coeffs[n], 0, n, outer.field)
    for k in range(n - 1, -1, -1):
        acc = acc * inner + outer.coeffs[k]
    return acc


def geometric(order: int, ratio=Fraction(1)) -> TruncatedSeries:
    """``1 / (1 - ratio t)``."""
    out, p = [], ratio ** 0
    for _ in range(order + 1):
        out.append(p)
        p = p * ratio
    return TruncatedSeries(out)


def euler_transform(f: TruncatedSeries, lam, mu) -> TruncatedSeries:
    """Coefficients of ``(1/(1 - lam t)) f(mu t / (1 - lam t))`` via composition."""
    n = f.order
    g = geometric(n, lam)
    if g.field != f.field:
        g = g.to_complex()
    inner = (g * mu).mul_t().truncate(n)
    if inner.field != f.field:
        f = f.to_complex()
        inner = inner.to_complex()
        g = g.to_complex()
    return g * series_compose(f, inner)


def euler_transform_direct(f: TruncatedSeries, lam, mu) -> TruncatedSeries:
    """Same coefficients as :func:`euler_transform`, from the weighted binomial sum
    ``sum_k C(n,k) mu^k lam^(n-k) a_k``.  Kept as an independent cross-check."""
    a = f.coeffs
    out = []
    for n in range(len(a)):
        out.append(sum(math.comb(n, k) * mu**k * lam ** (n - k) * a[k] for k in range(n + 1)))
    return TruncatedSeries(out)


@dataclass(frozen=True)
class TransformedSequence:
    values: tuple
    source: Any = None
    direction: str = "forward"


def binomial_transform(a, direction: str = "forward", source: Any = None) -> TransformedSequence:
    """``b_n = sum_{k<=n} C(n,k) (-1)^k a_k``.

    The map is an involution, so ``"inverse"`` uses the same kernel.  ``a``
    may be a list of numbers, a :class:`TruncatedSeries` or a
    :class:`~hsl.kernels.TransformedSequence`.
    """
    if direction not in ("forward", "inverse"):
        raise UsageError("direction must be 'forward' or 'inverse'")
    if isinstance(a, (TruncatedSeries, TransformedSequence)):
        vals = list(a.coeffs if isinstance(a, TruncatedSeries) else a.values)
    else:
        vals = list(a)
    exact = all(is_exact(v) for v in vals)
    out = []
    for n in range(len(vals)):
        terms = [(-1 if k % 2 else 1) * math.comb(n, k) * vals[k] for k in range(n + 1)]
        if exact:
            out.append(sum(terms, Fraction(0)))
        elif any(isinstance(v, complex) for v in terms):
            out.append(complex(math.fsum(v.real for v in terms), math.fsum(v.imag for v in terms)))
        else:
            out.append(math.fsum(terms))
    return TransformedSequence(tuple(out), source, direction)


def sequence_series(seq: SequenceSpec, order: int, exact: bool | None = None) -> TruncatedSeries:
    """The generating function ``sum a_k t^k`` of a sequence spec."""
    return TruncatedSeries(seq.terms(order, exact))


# ---------------------------------------------------------------- catalog


def _neg_log1m(order: int) -> TruncatedSeries:
    return TruncatedSeries([Fraction(0)] + [Fraction(1, k) for k in range(1, order + 1)])


def _log1p(order: int) -> TruncatedSeries:
    return TruncatedSeries(
        [Fraction(0)] + [Fraction(-1 if k % 2 == 0 else 1, k) for k in range(1, order + 1)]
    )


def _li2(order: int) -> TruncatedSeries:
    return TruncatedSeries([Fraction(0)] + [Fraction(1, k * k) for k in range(1, order + 1)])


def _param(params, name):
    try:
        v = params[name]
    except KeyError:
        raise UsageError(f"catalog entry needs parameter {name!r}") from None
    if isinstance(v, str):
        v = Fraction(v)
    return Fraction(v) if is_exact(v) else v


def _cat_neg_log1m_over_t(order, params):
    return _neg_log1m(order + 1).div_t()


def _cat_neg_log1m(order, params):
    return _neg_log1m(order)


def _cat_log1m_over_1m(order, params):
    return -_neg_log1m(order) * geometric(order)


def _cat_half_log_sq(order, params):
    l1 = _log1p(order + 1)
    return (l1 * l1).div_t() * Fraction(-1, 2)


def _cat_li2(order, params):
    return _li2(order)


def _cat_li2_neg_plus_half_logsq(order, params):
    l1 = _log1p(order)
    return _li2(order).rescale(-1) + (l1 * l1) * Fraction(1, 2)


def _cat_neg_li2_over_1m(order, params):
    return -_li2(order) * geometric(order)


def _cat_binom_p(order, params):
    # (1 - t)^(-p-1) from the generalized binomial series of (1 + u)^(-p-1) at u = -t
    p = _param(params, "p")
    return TruncatedSeries([binom_general(-p - 1, k) * (-1) ** k for k in range(order + 1)])


def _cat_exp_z(order, params):
    z = _param(params, "z")
    out, term = [], z**0
    for k in range(order + 1):
        out.append(term)
        term = term * z / (k + 1)
    return TruncatedSeries(out)


def _cat_geometric(order, params):
    return geometric(order)


CATALOG = {
    "neg-log1m-over-t": _cat_neg_log1m_over_t,
    "neg-log1m": _cat_neg_log1m,
    "log1m-over-1m": _cat_log1m_over_1m,
    "half-log-sq-1p-over-neg2t": _cat_half_log_sq,
    "li2": _cat_li2,
    "li2-neg-plus-half-logsq": _cat_li2_neg_plus_half_logsq,
    "neg-li2-over-1m": _cat_neg_li2_over_1m,
    "binom-p": _cat_binom_p,
    "exp-z": _cat_exp_z,
    "geometric": _cat_geometric,
}


def catalog_series(name: str, params: dict | None = None, order: int = 32) -> TruncatedSeries:
    """Named generating function, expanded from its closed form to ``order``.

    Entries are built with series arithmetic from a few elementary expansions
    (``-ln(1-t)``, ``ln(1+t)``, ``Li2``, geometric), so comparing them against
    sequences from :mod:`hsl.kernels` is a genuine check.
    """
    try:
        build = CATALOG[name]
    except KeyError:
        raise UsageError(f"unknown catalog series {name!r}; known: {', '.join(CATALOG)}") from None
    if order < 0:
        raise DomainError("order must be nonnegative")
    return build(order, params or {})


def gaussian_egf(x, order: int, scale=Fraction(1)) -> TruncatedSeries:
    """Series in t of ``exp(2 x s - s^2)`` with ``s = scale * t``.

    Built as ``exp(2 x scale t) * exp(-scale^2 u)`` with ``u = t^2``, from the
    ``exp-z`` catalog entry.
    """
    lin = catalog_series("exp-z", {"z": 2 * x * scale}, order)
    quad = catalog_series("exp-z", {"z": -(scale * scale)}, order)
    if lin.field != quad.field:
        lin, quad = lin.to_complex(), quad.to_complex()
    t2 = TruncatedSeries.monomial(quad.coeffs[0] ** 0, 2, order, quad.field)
    return lin * series_compose(quad, t2)
