"""Two-sided evaluation of the Hermite transformation and its instances.

Every numeric check sums the left and right sides independently, each
truncated at ``order``, and reports the residual together with a tail
estimate (magnitude of the last included term).  Exact checks expand both
sides as rational power series in t and compare coefficients literally.
"""

from __future__ import annotations

import cmath
import math
import time
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..errors import CapacityError, DomainError, ModeUnavailableError, UsageError
from ..fps import (
    TruncatedSeries,
    binomial_transform,
    catalog_series,
    euler_transform,
    gaussian_egf,
    series_compose,
)
from ..kernels import (
    DEGREE_CAP,
    SequenceSpec,
    as_exact,
    binom_general,
    harmonic,
    harmonic_table,
    hermite_eval,
    hermite_sequence,
    is_exact,
    laguerre_eval,
    stirling_function,
)
from .report import (
    CLOSED_FORM,
    DEFAULT_TOLERANCE,
    EXACT,
    NUMERIC,
    CheckReport,
    Tolerance,
    exact_verdict,
    numeric_verdict,
)

DISK = 0.25
MIN_ORDER = 8

# ---------------------------------------------------------------- helpers


def _num(v):
    """Floating form of a parameter."""
    if isinstance(v, (float, complex)):
        return v
    if isinstance(v, str):
        v = as_exact(v)
    return float(v)


def _ex(v, name: str):
    if isinstance(v, str):
        try:
            return as_exact(v)
        except ValueError:
            pass
    if not is_exact(v):
        raise ModeUnavailableError(f"exact mode needs rational {name}, got {v!r}")
    return Fraction(v)


def _fsum(values):
    vals = [complex(v) if isinstance(v, complex) else float(v) for v in values]
    if any(isinstance(v, complex) for v in vals):
        return complex(math.fsum(v.real for v in vals), math.fsum(v.imag for v in vals))
    return math.fsum(vals)


def _exp(z):
    return cmath.exp(z) if isinstance(z, complex) else math.exp(z)


class SeriesTailWarning(RuntimeWarning):
    """The last summed term is not clearly smaller than the ones before it."""


TAIL_WINDOW = 4
TAIL_SHRINK = 2.0


def _tail(terms) -> float:
    return float(abs(terms[-1])) if terms else 0.0


def _warn_if_tail_stalls(id_, side, terms):
    # the last-term estimate only means something while terms are shrinking
    if len(terms) <= TAIL_WINDOW or not terms[-1]:
        return
    if TAIL_SHRINK * abs(terms[-1]) >= max(abs(v) for v in terms[-1 - TAIL_WINDOW:-1]):
        warnings.warn(f"{id_}: {side} terms are not decreasing at the truncation order; "
                      "the tail estimate is unreliable", SeriesTailWarning, stacklevel=3)


def _check_disk(t, allow_outside: bool, limit: float = DISK, what: str = "|t|", strict=False):
    mag = abs(t)
    outside = mag >= limit if strict else mag > limit
    if outside:
        msg = f"{what} = {mag:g} outside the evaluation disk ({limit:g})"
        if not allow_outside:
            raise DomainError(msg)
        warnings.warn(msg, RuntimeWarning, stacklevel=3)


def _check_order(order: int, minimum: int = MIN_ORDER):
    if order < minimum:
        raise DomainError(f"order must be at least {minimum}")
    if order > DEGREE_CAP:
        raise CapacityError(f"order {order} exceeds degree cap {DEGREE_CAP}")


def _clock():
    return time.perf_counter()


def _ms(start):
    return (time.perf_counter() - start) * 1e3


def _numeric_report(id_, params, order, lhs_terms, rhs_terms, rhs_factor, tol, mode=NUMERIC,
                    rhs_tail=True, start=None):
    lhs = _fsum(lhs_terms)
    rhs = rhs_factor * _fsum(rhs_terms)
    tail = _tail(lhs_terms)
    _warn_if_tail_stalls(id_, "left", lhs_terms)
    if rhs_tail:
        tail = max(tail, float(abs(rhs_factor)) * _tail(rhs_terms))
        _warn_if_tail_stalls(id_, "right", rhs_terms)
    res, rel, ok = numeric_verdict(lhs, rhs, tail, tol)
    return CheckReport(id_, mode, params, order, lhs, rhs, res, rel, tail, ok,
                       None if start is None else _ms(start))


def _exact_report(id_, params, order, lhs, rhs, start=None):
    lhs, rhs = list(lhs), list(rhs)
    res, rel, ok = exact_verdict(lhs, rhs)
    return CheckReport(id_, EXACT, params, order, lhs, rhs, res, rel, None, ok,
                       None if start is None else _ms(start))


# ---------------------------------------------------------------- generic transformation


def _transform_sides(a_terms, b_terms, x, t):
    """Term lists for ``sum a_n H_n(x) t^n/n!`` and ``sum (-1)^n b_n H_n(x-t) t^n/n!``."""
    order = len(a_terms) - 1
    hx = hermite_sequence(order, x)
    hs = hermite_sequence(order, x - t)
    lhs, rhs = [], []
    tn = 1.0
    for n in range(order + 1):
        w = tn / math.factorial(n)
        lhs.append(_to_float(a_terms[n]) * hx[n] * w)
        rhs.append((-1) ** n * _to_float(b_terms[n]) * hs[n] * w)
        tn *= t
    return lhs, rhs


def _to_float(v):
    return float(v) if is_exact(v) else v


def transformed_coefficients(a: SequenceSpec, order: int) -> list:
    """``b_n`` of the Hermite transformation for sequence ``a`` (exact when possible)."""
    exact = a.exactness
    return list(binomial_transform(a.terms(order, exact)).values)


def theorem1_check(a: SequenceSpec, x, t, order: int = 40, tol: Tolerance = DEFAULT_TOLERANCE,
                   allow_outside: bool = False) -> CheckReport:
    """Generic Hermite transformation for an arbitrary coefficient sequence.

    Left side ``sum a_n H_n(x) t^n / n!``; right side
    ``e^{2xt - t^2} sum (-1)^n H_n(x - t) t^n / n! * b_n`` with ``b`` the
    binomial transform of ``a``.
    """
    start = _clock()
    x, t = _num(x), _num(t)
    _check_disk(t, allow_outside)
    _check_order(order)
    a_terms = a.terms(order, a.exactness)
    b_terms = transformed_coefficients(a, order)
    lhs, rhs = _transform_sides(a_terms, b_terms, x, t)
    params = {"sequence": a.kind, **dict(a.params), "x": x, "t": t}
    return _numeric_report("theorem1", params, order, lhs, rhs, _exp(2 * x * t - t * t), tol,
                           start=start)


def lemma1_check(c, a: SequenceSpec, t, order: int = 40, tol: Tolerance = DEFAULT_TOLERANCE,
                 allow_outside: bool = False) -> CheckReport:
    """Hadamard-product transformation with ``g(t) = e^{ct}``.

    ``sum a_n c^n t^n / n!`` against ``e^{ct} sum (-1)^n c^n t^n / n! * b_n``.
    """
    start = _clock()
    c, t = _num(c), _num(t)
    _check_disk(t, allow_outside)
    _check_order(order)
    a_terms = a.terms(order, a.exactness)
    b_terms = transformed_coefficients(a, order)
    lhs, rhs = [], []
    ct = 1.0
    for n in range(order + 1):
        w = ct / math.factorial(n)
        lhs.append(_to_float(a_terms[n]) * w)
        rhs.append((-1) ** n * _to_float(b_terms[n]) * w)
        ct *= c * t
    params = {"c": c, "sequence": a.kind, **dict(a.params), "t": t}
    return _numeric_report("lemma1", params, order, lhs, rhs, _exp(c * t), tol, start=start)


# ---------------------------------------------------------------- corollaries


@dataclass(frozen=True)
class Corollary:
    """A corollary in its own two-sided form.

    Left side ``sum_{n>=start} lhs_weight(n) H_n(x) t^n``; right side
    ``exp(2 x s - s^2) sum_{n>=start} rhs_weight(n) H_n(x - s) t^n`` with
    ``s = shift * t``.  Weights take ``(n, params)`` where params are exact
    or floating depending on the mode.
    """

    id: str
    params: tuple[str, ...]
    lhs_weight: Callable
    rhs_weight: Callable
    sequence: Callable  # params -> SequenceSpec for the generic path
    start: int = 0
    shift: Callable = lambda P: 1
    validate: Callable = lambda P: None


def _fact(n):
    return math.factorial(n)


def _sgn(n):
    return -1 if n % 2 else 1


def _power_int(alpha):
    if is_exact(alpha) and Fraction(alpha).denominator == 1:
        return int(alpha)
    return None


def _cor10_lhs(n, P):
    if n == 0:
        return 0
    alpha = P["alpha"]
    m = _power_int(alpha)
    if m is not None:
        return Fraction(n) ** m / _fact(n)
    return _exp(alpha * math.log(n)) / _fact(n)


def _cor10_validate(P):
    if P["alpha"] == 0:
        raise DomainError("cor10 needs alpha != 0")


COROLLARIES: dict[str, Corollary] = {}


def _reg(c: Corollary):
    COROLLARIES[c.id] = c


_reg(Corollary(
    "cor1", (),
    lambda n, P: Fraction(1, _fact(n + 1)),
    lambda n, P: Fraction(_sgn(n), _fact(n + 1)),
    lambda P: SequenceSpec("one-over-k-plus-1"),
))
_reg(Corollary(
    "cor2", (),
    lambda n, P: Fraction(1, _fact(n) * n),
    lambda n, P: -_sgn(n) * harmonic(n) / _fact(n),
    lambda P: SequenceSpec("one-over-k"),
    start=1,
))
_reg(Corollary(
    "cor3", (),
    lambda n, P: harmonic(n) / _fact(n),
    lambda n, P: Fraction(-_sgn(n), _fact(n) * n),
    lambda P: SequenceSpec("harmonic"),
    start=1,
))
# sign on the right follows from the binomial identity sum C(n,k)(-1)^k H_k/(k+1) = -H_n/(n+1)
_reg(Corollary(
    "cor4", (),
    lambda n, P: harmonic(n) / _fact(n + 1),
    lambda n, P: -_sgn(n) * harmonic(n) / _fact(n + 1),
    lambda P: SequenceSpec("harmonic-over-k-plus-1"),
))
_reg(Corollary(
    "cor5", (),
    lambda n, P: harmonic(n) / (_fact(n) * n),
    lambda n, P: -_sgn(n) * harmonic(n, 2) / _fact(n),
    lambda P: SequenceSpec("harmonic-over-k"),
    start=1,
))
_reg(Corollary(
    "cor6", ("z",),
    lambda n, P: P["z"] ** n / _fact(n) ** 2,
    lambda n, P: _sgn(n) * laguerre_eval(n, P["z"]) / _fact(n),
    lambda P: SequenceSpec("exp-z", {"z": P["z"]}),
))
_reg(Corollary(
    "cor7", ("z",),
    lambda n, P: laguerre_eval(n, P["z"]) / _fact(n),
    lambda n, P: _sgn(n) * P["z"] ** n / _fact(n) ** 2,
    lambda P: SequenceSpec("laguerre", {"z": P["z"]}),
))
_reg(Corollary(
    "cor8", ("z", "y"),
    lambda n, P: hermite_eval(n, P["z"]) / _fact(n),
    lambda n, P: hermite_eval(n, P["z"] - P["y"]) / _fact(n),
    lambda P: SequenceSpec("hermite-scaled", {"z": P["z"], "y": P["y"]}),
    shift=lambda P: 2 * P["y"],
))
# binom(p+k,k) transforms to (-1)^n binom(p,n), which absorbs the alternating sign
_reg(Corollary(
    "cor9", ("p",),
    lambda n, P: binom_general(P["p"] + n, n) / _fact(n),
    lambda n, P: binom_general(P["p"], n) / _fact(n),
    lambda P: SequenceSpec("binom-p", {"p": P["p"]}),
))
# k^alpha transforms to (-1)^n n! S(alpha, n); same cancellation
_reg(Corollary(
    "cor10", ("alpha",),
    _cor10_lhs,
    lambda n, P: stirling_function(P["alpha"], n),
    lambda P: SequenceSpec("power", {"alpha": P["alpha"]}),
    validate=_cor10_validate,
))


def _lookup(id_: str) -> Corollary:
    try:
        return COROLLARIES[id_]
    except KeyError:
        raise UsageError(f"unknown corollary {id_!r}; known: {', '.join(COROLLARIES)}") from None


def _cor_params(cor: Corollary, params: dict, exact: bool) -> dict:
    missing = set(cor.params) - set(params)
    if missing:
        raise UsageError(f"{cor.id} needs parameters {sorted(missing)}")
    out = {}
    for name in cor.params:
        v = params[name]
        if exact:
            out[name] = _ex(v, name)
        elif name == "alpha" and _power_int(v) is not None:
            out[name] = int(v)  # integer alpha keeps exact Stirling numbers
        else:
            out[name] = _num(v)
    cor.validate(out)
    return out


def corollary_sides(id_: str, params: dict, x, t, order: int):
    """Term lists and prefactor of both sides of a corollary in numeric mode."""
    cor = _lookup(id_)
    P = _cor_params(cor, params, exact=False)
    x, t = _num(x), _num(t)
    s = cor.shift(P) * t
    hx = hermite_sequence(order, x)
    hs = hermite_sequence(order, x - s)
    lhs, rhs = [], []
    tn = t**cor.start
    for n in range(cor.start, order + 1):
        lhs.append(_to_float(cor.lhs_weight(n, P)) * hx[n] * tn)
        rhs.append(_to_float(cor.rhs_weight(n, P)) * hs[n] * tn)
        tn *= t
    return lhs, rhs, _exp(2 * x * s - s * s), P


def corollary_check(id_: str, params: dict, x, t, order: int = 40,
                    tol: Tolerance = DEFAULT_TOLERANCE, allow_outside: bool = False) -> CheckReport:
    """Evaluate both sides of a corollary as written, independent of the generic path."""
    start = _clock()
    cor = _lookup(id_)
    _check_order(order)
    P = _cor_params(cor, params, exact=False)
    if id_ == "cor8":
        _check_disk(2 * P["y"] * _num(t), allow_outside, what="|2yt|")
    else:
        _check_disk(_num(t), allow_outside)
    lhs, rhs, factor, P = corollary_sides(id_, params, x, t, order)
    rep_params = {**P, "x": _num(x), "t": _num(t)}
    return _numeric_report(id_, rep_params, order, lhs, rhs, factor, tol, start=start)


def corollary_generic_check(id_: str, params: dict, x, t, order: int = 40,
                            tol: Tolerance = DEFAULT_TOLERANCE,
                            allow_outside: bool = False) -> CheckReport:
    """The same corollary through :func:`theorem1_check` with its sequence."""
    cor = _lookup(id_)
    P = _cor_params(cor, params, exact=False)
    raw = {k: (params[k] if is_exact(params[k]) else P[k]) for k in cor.params}
    # cor8 runs the scaled sequence H_k(z)/(2y)^k at transformation variable 2yt
    return theorem1_check(cor.sequence(raw), x, cor.shift(P) * _num(t), order, tol, allow_outside)


def coefficient_check(id_: str, params: dict, order: int = 32) -> CheckReport:
    """Exact coefficient-level comparison of both sides of a corollary."""
    start = _clock()
    cor = _lookup(id_)
    if "x" not in params:
        raise UsageError("coefficient_check needs x")
    x = _ex(params["x"], "x")
    P = _cor_params(cor, params, exact=True)
    if cor.id == "cor10" and _power_int(P["alpha"]) is None:
        raise ModeUnavailableError("cor10 exact mode needs an integer alpha")
    if order < 0 or order > DEGREE_CAP:
        raise CapacityError(f"order {order} outside 0..{DEGREE_CAP}")
    scale = Fraction(cor.shift(P))
    hx = hermite_sequence(order, x)
    lhs = [Fraction(0)] * (order + 1)
    for n in range(cor.start, order + 1):
        lhs[n] = cor.lhs_weight(n, P) * hx[n]
    s = TruncatedSeries.variable(order) * scale
    hs = hermite_sequence(order, x - s)
    acc = TruncatedSeries.zero(order)
    for n in range(cor.start, order + 1):
        v = cor.rhs_weight(n, P)
        if v:
            acc = acc + (hs[n] * Fraction(v)).mul_t(n).truncate(order)
    rhs = gaussian_egf(x, order, scale) * acc
    return _exact_report(id_, {**P, "x": x}, order, lhs, rhs.coeffs, start)


# ---------------------------------------------------------------- closed forms


CLOSED_FORM_KINDS = {"binom-p": "eq2.37", "stirling-m": "eq2.41"}


def closed_form_rhs_terms(kind: str, m_or_p: int, x, t):
    """Prefactor and the finite list of right-side terms (exactly m_or_p + 1)."""
    if kind not in CLOSED_FORM_KINDS:
        raise UsageError(f"closed form kind must be one of {sorted(CLOSED_FORM_KINDS)}")
    if isinstance(m_or_p, bool) or not is_exact(m_or_p) or Fraction(m_or_p).denominator != 1:
        raise DomainError("closed forms need a positive integer parameter")
    m = int(m_or_p)
    if m < 1:
        raise DomainError("closed forms need a positive integer parameter")
    x, t = _num(x), _num(t)
    hs = hermite_sequence(m, x - t)
    terms = []
    for n in range(m + 1):
        if kind == "binom-p":
            w = math.comb(m, n) * t**n / _fact(n)
        else:
            w = float(stirling_function(m, n)) * t**n
        terms.append(w * hs[n])
    return _exp(2 * x * t - t * t), terms


def closed_form_check(kind: str, m_or_p: int, x, t, order: int = 40,
                      tol: Tolerance = DEFAULT_TOLERANCE, allow_outside: bool = False) -> CheckReport:
    """Infinite left side (truncated) against the finite right side."""
    start = _clock()
    x, t = _num(x), _num(t)
    _check_disk(t, allow_outside)
    _check_order(order)
    factor, rhs_terms = closed_form_rhs_terms(kind, m_or_p, x, t)
    m = int(m_or_p)
    hx = hermite_sequence(order, x)
    lhs = []
    tn = 1.0
    for n in range(order + 1):
        if kind == "binom-p":
            w = math.comb(m + n, n) / _fact(n)
        else:
            w = n**m / _fact(n)
        lhs.append(w * hx[n] * tn)
        tn *= t
    name = "p" if kind == "binom-p" else "m"
    params = {name: m, "x": x, "t": t}
    return _numeric_report(CLOSED_FORM_KINDS[kind], params, order, lhs, rhs_terms, factor, tol,
                           mode=CLOSED_FORM, rhs_tail=False, start=start)


# ---------------------------------------------------------------- bilinear generating function


def mehler_closed_form(x, z, t):
    """``(1 - 4t^2)^(-1/2) exp(x^2 - (x - 2zt)^2 / (1 - 4t^2))``."""
    q = 1 - 4 * t * t
    return _exp(x * x - (x - 2 * z * t) ** 2 / q) / math.sqrt(q)


def mehler_check(x, z, t, order: int = 40, y=None, tol: Tolerance = DEFAULT_TOLERANCE,
                 allow_outside: bool = False) -> CheckReport:
    """Bilinear Hermite series against its closed form.

    Without ``y`` the series is ``sum H_n(x) H_n(z) t^n / n!``.  With ``y``
    it is the shifted form ``e^{4xyt - 4y^2t^2} sum H_n(x - 2yt) H_n(z - y) t^n / n!``
    (report id ``mehler-shifted``); ``y = 0`` reproduces the unshifted sums.
    """
    start = _clock()
    x, z, t = _num(x), _num(z), _num(t)
    _check_disk(t, allow_outside, strict=True)
    _check_order(order)
    yy = 0.0 if y is None else _num(y)
    hx = hermite_sequence(order, x - 2 * yy * t)
    hz = hermite_sequence(order, z - yy)
    terms = []
    tn = 1.0
    for n in range(order + 1):
        terms.append(hx[n] * hz[n] * tn / _fact(n))
        tn *= t
    factor = _exp(4 * x * yy * t - 4 * yy * yy * t * t)
    series = factor * _fsum(terms)
    closed = mehler_closed_form(x, z, t)
    id_ = "mehler" if y is None else "mehler-shifted"
    tail = float(abs(factor)) * _tail(terms)
    _warn_if_tail_stalls(id_, "series", terms)
    res, rel, ok = numeric_verdict(series, closed, tail, tol)
    params = {"x": x, "z": z, "t": t} if y is None else {"x": x, "z": z, "y": yy, "t": t}
    return CheckReport(id_, NUMERIC, params, order, series, closed, res, rel, tail, ok, _ms(start))


# ---------------------------------------------------------------- exact auxiliary identities


def derivative_identity_check(n: int, x, order: int = 16) -> CheckReport:
    """n-th t-derivative of the Hermite EGF equals the EGF times ``H_n(x - t)``.

    Left: coefficients ``H_{n+j}(x) / j!``; right: ``e^{2xt-t^2} * H_n(x - t)``
    expanded exactly.
    """
    start = _clock()
    x = _ex(x, "x")
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n + order > DEGREE_CAP:
        raise CapacityError(f"n + order = {n + order} exceeds degree cap {DEGREE_CAP}")
    hx = hermite_sequence(n + order, x)
    lhs = [hx[n + j] / _fact(j) for j in range(order + 1)]
    poly = hermite_eval(n, x - TruncatedSeries.variable(order))
    rhs = gaussian_egf(x, order) * poly
    return _exact_report("deriv-identity", {"n": n, "x": x}, order, lhs, rhs.coeffs, start)


def landen_check(order: int = 32) -> CheckReport:
    """``Li2(-t) + ln^2(1+t)/2 == -Li2(t/(1+t))`` coefficient-wise."""
    start = _clock()
    lhs = catalog_series("li2-neg-plus-half-logsq", {}, order)
    inner = TruncatedSeries([0] + [(-1) ** (k + 1) for k in range(1, order + 1)])
    rhs = -series_compose(catalog_series("li2", {}, order), inner)
    return _exact_report("landen", {}, order, lhs.coeffs, rhs.coeffs, start)


def genfunc_check(which: str, order: int = 32) -> CheckReport:
    """Generating-function identities linking the catalog to harmonic sequences.

    ``"2.8"``: ``(1/(1-t)) f(-t/(1-t))`` with ``f = -ln(1-t)`` gives ``-H_n``.
    ``"2.13"``: ``-ln^2(1+t)/(2t)`` has coefficients ``(-1)^k H_k/(k+1)``.
    ``"2.20"``: ``(1/(1-t)) f(t/(1-t))`` with ``f = Li2(-t) + ln^2(1+t)/2``
    gives ``-H^(2)_n``.
    """
    start = _clock()
    if which == "2.8":
        lhs = euler_transform(catalog_series("neg-log1m", {}, order), 1, -1).coeffs
        rhs = [-h for h in harmonic_table(order)]
    elif which == "2.13":
        lhs = catalog_series("half-log-sq-1p-over-neg2t", {}, order).coeffs
        rhs = [_sgn(k) * h / (k + 1) for k, h in enumerate(harmonic_table(order))]
    elif which == "2.20":
        lhs = euler_transform(catalog_series("li2-neg-plus-half-logsq", {}, order), 1, 1).coeffs
        rhs = [-h for h in harmonic_table(order, 2)]
    else:
        raise UsageError(f"unknown generating-function identity {which!r}")
    return _exact_report(f"genfunc-{which}", {}, order, lhs, rhs, start)


def addition_check(y, z, order: int = 20) -> CheckReport:
    """``H_n(z + y) == sum_k C(n,k) (2y)^(n-k) H_k(z)`` for n = 0..order."""
    start = _clock()
    y, z = _ex(y, "y"), _ex(z, "z")
    lhs = hermite_sequence(order, z + y)
    hz = hermite_sequence(order, z)
    rhs = [sum((math.comb(n, k) * (2 * y) ** (n - k) * hz[k] for k in range(n + 1)), Fraction(0))
           for n in range(order + 1)]
    return _exact_report("addition-2.27", {"y": y, "z": z}, order, lhs, rhs, start)


def vandermonde_check(p, order: int = 30) -> CheckReport:
    """Binomial transform of ``binom(p+k, k)`` equals ``(-1)^n binom(p, n)``."""
    start = _clock()
    p = _ex(p, "p")
    a = [binom_general(p + k, k) for k in range(order + 1)]
    lhs = binomial_transform(a).values
    rhs = [_sgn(n) * binom_general(p, n) for n in range(order + 1)]
    return _exact_report("vandermonde-2.33", {"p": p}, order, lhs, rhs, start)


INVOLUTION_PAIRS = ("cor2-cor3", "cor6-cor7", "random")


def random_rational_sequence(seed: int, length: int) -> list[Fraction]:
    import random

    rng = random.Random(seed)
    return [Fraction(rng.randint(-50, 50), rng.randint(1, 30)) for _ in range(length)]


def involution_check(pair: str = "random", order: int = 32, seed: int = 0, z=1) -> CheckReport:
    """Binomial-transform inverse pairs.

    ``"random"``: ``bt(bt(a)) == a`` for a seeded random rational sequence.
    ``"cor2-cor3"``: ``bt(1/k) == -H_n`` and ``bt(H_k) == -1/n`` (``n >= 1``).
    ``"cor6-cor7"``: ``bt(z^k/k!) == L_n(z)`` and ``bt(L_k(z)) == z^n/n!``.
    Paired checks concatenate both directions into one coefficient vector.
    """
    start = _clock()
    if pair == "random":
        a = random_rational_sequence(seed, order + 1)
        lhs = list(binomial_transform(binomial_transform(a)).values)
        rhs = a
        params = {"pair": pair, "seed": seed}
    elif pair == "cor2-cor3":
        inv_k = SequenceSpec("one-over-k").terms(order)
        harm = SequenceSpec("harmonic").terms(order)
        lhs = list(binomial_transform(inv_k).values) + list(binomial_transform(harm).values)[1:]
        rhs = [-h for h in harm] + [-v for v in inv_k][1:]
        params = {"pair": pair}
    elif pair == "cor6-cor7":
        z = _ex(z, "z")
        ez = SequenceSpec("exp-z", {"z": z}).terms(order)
        lag = SequenceSpec("laguerre", {"z": z}).terms(order)
        lhs = list(binomial_transform(ez).values) + list(binomial_transform(lag).values)
        rhs = lag + ez
        params = {"pair": pair, "z": z}
    else:
        raise UsageError(f"pair must be one of {INVOLUTION_PAIRS}")
    return _exact_report("inversion-involution", params, order, lhs, rhs, start)
