"""Registry of every checked identity and the suite runner."""

from __future__ import annotations

import fnmatch
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..errors import HSLError, UsageError
from ..kernels import SequenceSpec
from . import checks
from .report import CLOSED_FORM, DEFAULT_TOLERANCE, EXACT, NUMERIC, CheckReport, Tolerance

CANONICAL_X = 0.3
CANONICAL_T = 0.1
NUMERIC_ORDER = 40
EXACT_ORDER = 32


@dataclass(frozen=True)
class Param:
    name: str
    kind: str  # real | rational | int | complex | choice
    low: float | None = None
    high: float | None = None
    choices: tuple = ()


@dataclass(frozen=True)
class IdentityInstance:
    """A registered identity: how to run it, where, and in which modes."""

    id: str
    params_schema: tuple[Param, ...]
    modes: tuple[str, ...]
    description: str
    runner: Callable[..., CheckReport] = field(repr=False)
    canonical: tuple = field(default=(), repr=False)  # (mode, params, order)
    draw: Callable | None = field(default=None, repr=False)  # (rng, mode) -> (params, order)
    finite_param: str | None = None

    def run(self, mode: str, params: dict, order: int | None = None,
            tol: Tolerance = DEFAULT_TOLERANCE, allow_outside: bool = False) -> CheckReport:
        if mode not in self.modes:
            raise UsageError(f"{self.id} has no {mode} mode (available: {', '.join(self.modes)})")
        if order is None:
            order = EXACT_ORDER if mode == EXACT else NUMERIC_ORDER
        return self.runner(mode, dict(params), order, tol, allow_outside)


# ---------------------------------------------------------------- draws


def _real(rng, lo, hi, exact):
    if exact:
        den = rng.randint(1, 6)
        return Fraction(rng.randint(math.ceil(lo * den), math.floor(hi * den)), den)
    return round(rng.uniform(lo, hi), 6)


_X = Param("x", "real", -1.0, 1.0)
_T = Param("t", "real", -0.2, 0.2)


def _draw_from(schema, rng, mode, exact_order=EXACT_ORDER):
    exact = mode == EXACT
    out = {}
    for p in schema:
        if exact and p.name == "t":
            continue
        if p.kind == "real":
            out[p.name] = _real(rng, p.low, p.high, exact)
        elif p.kind == "rational":
            out[p.name] = _real(rng, p.low, p.high, True)
        elif p.kind == "int":
            out[p.name] = rng.randint(int(p.low), int(p.high))
        elif p.kind == "complex":
            if exact:
                out[p.name] = rng.randint(1, 5)
            else:
                out[p.name] = complex(round(rng.uniform(p.low, p.high), 6), round(rng.uniform(-1, 1), 6))
        elif p.kind == "choice":
            out[p.name] = rng.choice(p.choices)
    return out, (exact_order if exact else NUMERIC_ORDER)


# ---------------------------------------------------------------- runners


def _cor_runner(id_):
    def run(mode, params, order, tol, allow_outside):
        if mode == EXACT:
            return checks.coefficient_check(id_, params, order)
        return checks.corollary_check(id_, params, params.pop("x"), params.pop("t"), order, tol,
                                      allow_outside)
    return run


def _closed_runner(kind, name):
    def run(mode, params, order, tol, allow_outside):
        return checks.closed_form_check(kind, params[name], params["x"], params["t"], order, tol,
                                        allow_outside)
    return run


def _mehler_runner(shifted):
    def run(mode, params, order, tol, allow_outside):
        y = params["y"] if shifted else None
        return checks.mehler_check(params["x"], params["z"], params["t"], order, y=y, tol=tol,
                                   allow_outside=allow_outside)
    return run


def _lemma1_runner(mode, params, order, tol, allow_outside):
    seq = SequenceSpec(params.get("sequence", "one-over-k-plus-1"))
    return checks.lemma1_check(params["c"], seq, params["t"], order, tol, allow_outside)


REGISTRY: dict[str, IdentityInstance] = {}


def _register(inst: IdentityInstance):
    REGISTRY[inst.id] = inst


_COR_INFO = {
    "cor1": ((), "a_k = 1/(k+1): weights 1/(n+1)! on both sides", {}, {}),
    "cor2": ((), "a_k = 1/k: harmonic numbers on the right", {}, {}),
    "cor3": ((), "a_k = harmonic(k): 1/n on the right", {}, {}),
    "cor4": ((), "a_k = harmonic(k)/(k+1)", {}, {}),
    "cor5": ((), "a_k = harmonic(k)/k: square harmonic numbers on the right", {}, {}),
    "cor6": ((Param("z", "real", -2.0, 2.0),), "a_k = z^k/k!: Laguerre polynomials on the right",
             {"z": 0.5}, {"z": Fraction(1)}),
    "cor7": ((Param("z", "real", -2.0, 2.0),), "a_k = L_k(z): inverse pairing of cor6",
             {"z": 0.5}, {"z": Fraction(1)}),
    "cor8": ((Param("z", "real", -1.0, 1.0), Param("y", "real", -1.0, 1.0)),
             "bilinear Hermite series, right side shifted by a free y",
             {"z": 0.5, "y": 0.3}, {"z": Fraction(1, 2), "y": Fraction(3, 10)}),
    "cor9": ((Param("p", "real", -2.0, 4.0),), "a_k = binom(p+k, k)", {"p": 3}, {"p": Fraction(2)}),
    "cor10": ((Param("alpha", "complex", 0.25, 3.0),), "a_k = k^alpha: generalized Stirling numbers",
              {"alpha": 3}, {"alpha": 3}),
}

_EXACT_X = {"cor6": Fraction(0), "cor8": Fraction(1, 5), "cor9": Fraction(1, 3),
            "cor10": Fraction(3, 10)}


def _cor_draw(id_, schema):
    def draw(rng, mode):
        params, order = _draw_from(schema, rng, mode)
        if id_ == "cor8" and mode != EXACT:
            # keep |2 y t| inside the disk
            params["t"] = round(rng.uniform(-0.1, 0.1), 6)
        return params, order
    return draw


for _id, (_extra, _desc, _num_p, _ex_p) in _COR_INFO.items():
    _schema = (_X, _T) + _extra
    _canon = [(NUMERIC, {**_num_p, "x": CANONICAL_X, "t": CANONICAL_T}, NUMERIC_ORDER)]
    if _id == "cor10":
        _canon += [(NUMERIC, {"alpha": a, "x": CANONICAL_X, "t": CANONICAL_T}, NUMERIC_ORDER)
                   for a in (0.5, 1 + 1j)]
    _canon.append((EXACT, {**_ex_p, "x": _EXACT_X.get(_id, Fraction(1, 2))}, EXACT_ORDER))
    _register(IdentityInstance(_id, _schema, (NUMERIC, EXACT), _desc, _cor_runner(_id),
                               tuple(_canon), _cor_draw(_id, _schema)))

_register(IdentityInstance(
    "eq2.37", (Param("p", "int", 1, 6), _X, _T), (CLOSED_FORM,),
    "binom(p+n, n) series with a finite (p+1)-term right side",
    _closed_runner("binom-p", "p"),
    tuple((CLOSED_FORM, {"p": p, "x": CANONICAL_X, "t": CANONICAL_T}, NUMERIC_ORDER) for p in (1, 2, 3)),
    lambda rng, mode: _draw_from((Param("p", "int", 1, 6), _X, _T), rng, NUMERIC),
    finite_param="p",
))
_register(IdentityInstance(
    "eq2.41", (Param("m", "int", 1, 8), _X, _T), (CLOSED_FORM,),
    "k^m series with a finite (m+1)-term Stirling right side",
    _closed_runner("stirling-m", "m"),
    tuple((CLOSED_FORM, {"m": m, "x": CANONICAL_X, "t": CANONICAL_T}, 50) for m in (1, 2, 3)),
    lambda rng, mode: (_draw_from((Param("m", "int", 1, 8), _X, _T), rng, NUMERIC)[0], 50),
    finite_param="m",
))

_MEHLER_SCHEMA = (_X, Param("z", "real", -1.0, 1.0), _T)
_register(IdentityInstance(
    "mehler", _MEHLER_SCHEMA, (NUMERIC,),
    "bilinear Hermite generating function against its closed form",
    _mehler_runner(False),
    ((NUMERIC, {"x": 0.2, "z": 0.4, "t": 0.1}, NUMERIC_ORDER),),
    lambda rng, mode: _draw_from(_MEHLER_SCHEMA, rng, NUMERIC),
))
_SHIFT_SCHEMA = _MEHLER_SCHEMA + (Param("y", "real", -1.0, 1.0),)
_register(IdentityInstance(
    "mehler-shifted", _SHIFT_SCHEMA, (NUMERIC,),
    "y-shifted bilinear series against the same closed form",
    _mehler_runner(True),
    tuple((NUMERIC, {"x": 0.2, "z": 0.4, "t": 0.1, "y": y}, NUMERIC_ORDER) for y in (0.0, 0.1, 0.3)),
    lambda rng, mode: _draw_from(_SHIFT_SCHEMA, rng, NUMERIC),
))
_DERIV_SCHEMA = (Param("n", "int", 0, 8), Param("x", "rational", -1.0, 1.0))
_register(IdentityInstance(
    "deriv-identity", _DERIV_SCHEMA, (EXACT,),
    "n-th t-derivative of the Hermite EGF equals EGF times H_n(x - t)",
    lambda mode, P, order, tol, ao: checks.derivative_identity_check(P["n"], P["x"], order),
    ((EXACT, {"n": 0, "x": Fraction(1, 2)}, 16), (EXACT, {"n": 1, "x": Fraction(1, 2)}, 16),
     (EXACT, {"n": 3, "x": Fraction(1, 3)}, 16)),
    lambda rng, mode: _draw_from(_DERIV_SCHEMA, rng, EXACT),
))
_LEMMA_SCHEMA = (Param("c", "real", -2.0, 2.0),
                 Param("sequence", "choice", choices=("constant-one", "one-over-k-plus-1", "one-over-k",
                                                      "harmonic", "harmonic-over-k")),
                 _T)
_register(IdentityInstance(
    "lemma1", _LEMMA_SCHEMA, (NUMERIC,),
    "Hadamard-product transformation with g(t) = exp(c t)",
    _lemma1_runner,
    ((NUMERIC, {"c": 0.6, "sequence": "one-over-k-plus-1", "t": 0.1}, NUMERIC_ORDER),
     (NUMERIC, {"c": 1.0, "sequence": "one-over-k", "t": 0.15}, 48)),
    lambda rng, mode: _draw_from(_LEMMA_SCHEMA, rng, NUMERIC),
))


def _exact_only(id_, desc, fn, canonical, schema=(), draw=None):
    _register(IdentityInstance(id_, schema, (EXACT,), desc,
                               lambda mode, P, order, tol, ao: fn(P, order), canonical, draw))


_exact_only("landen", "dilogarithm Landen identity, coefficient-wise",
            lambda P, order: checks.landen_check(order), ((EXACT, {}, EXACT_ORDER),))
_exact_only("genfunc-2.8", "Euler transform of -ln(1-t) gives -harmonic(n)",
            lambda P, order: checks.genfunc_check("2.8", order), ((EXACT, {}, EXACT_ORDER),))
_exact_only("genfunc-2.13", "-ln^2(1+t)/(2t) has coefficients (-1)^k harmonic(k)/(k+1)",
            lambda P, order: checks.genfunc_check("2.13", order), ((EXACT, {}, EXACT_ORDER),))
_exact_only("genfunc-2.20", "Euler transform of Li2(-t) + ln^2(1+t)/2 gives -harmonic2(n)",
            lambda P, order: checks.genfunc_check("2.20", order), ((EXACT, {}, EXACT_ORDER),))
_ADD_SCHEMA = (Param("y", "rational", -2.0, 2.0), Param("z", "rational", -2.0, 2.0))
_exact_only("addition-2.27", "Hermite addition formula",
            lambda P, order: checks.addition_check(P["y"], P["z"], order),
            ((EXACT, {"y": Fraction(1, 3), "z": Fraction(1, 2)}, 20),), _ADD_SCHEMA,
            lambda rng, mode: (_draw_from(_ADD_SCHEMA, rng, EXACT)[0], 20))
_VDM_SCHEMA = (Param("p", "rational", -3.0, 3.0),)
_exact_only("vandermonde-2.33", "binomial transform of binom(p+k, k)",
            lambda P, order: checks.vandermonde_check(P["p"], order),
            ((EXACT, {"p": Fraction(2)}, 30), (EXACT, {"p": Fraction(1, 2)}, 30)), _VDM_SCHEMA,
            lambda rng, mode: (_draw_from(_VDM_SCHEMA, rng, EXACT)[0], 30))
_INV_SCHEMA = (Param("pair", "choice", choices=("random",)), Param("seed", "int", 0, 10**6))
_exact_only("inversion-involution", "binomial transform is an involution; inverse sequence pairs",
            lambda P, order: checks.involution_check(P.get("pair", "random"), order,
                                                     seed=P.get("seed", 0), z=P.get("z", 1)),
            ((EXACT, {"pair": "random", "seed": 0}, EXACT_ORDER),
             (EXACT, {"pair": "cor2-cor3"}, EXACT_ORDER),
             (EXACT, {"pair": "cor6-cor7", "z": Fraction(1)}, 24)), _INV_SCHEMA,
            lambda rng, mode: (_draw_from(_INV_SCHEMA, rng, EXACT)[0], EXACT_ORDER))


# ---------------------------------------------------------------- lookup and suite


def get_identity(id_: str) -> IdentityInstance:
    try:
        return REGISTRY[id_]
    except KeyError:
        raise UsageError(f"unknown identity {id_!r}; known: {', '.join(REGISTRY)}") from None


def identity_ids() -> list[str]:
    return list(REGISTRY)


def _error_report(inst, mode, params, order, exc) -> CheckReport:
    return CheckReport(inst.id, mode, {**params, "error": f"{type(exc).__name__}: {exc}"}, order,
                       None, None, math.inf, math.inf, None, False, None)


def _execute(task, tol):
    inst, mode, params, order = task
    try:
        return inst.run(mode, params, order, tol)
    except HSLError as exc:
        return _error_report(inst, mode, params, order, exc)


def suite_tasks(filter: str | None = None, seed: int = 1, trials: int = 0,
                modes: tuple[str, ...] | None = None) -> list[tuple]:
    """Deterministic list of ``(instance, mode, params, order)`` in registry order."""
    tasks = []
    for inst in REGISTRY.values():
        if filter and not fnmatch.fnmatchcase(inst.id, filter):
            continue
        for mode in inst.modes:
            if modes is not None and mode not in modes:
                continue
            for m, params, order in inst.canonical:
                if m == mode:
                    tasks.append((inst, mode, dict(params), order))
            if inst.draw is None or not inst.params_schema:
                continue
            rng = random.Random(f"{seed}:{inst.id}:{mode}")
            for _ in range(trials):
                params, order = inst.draw(rng, mode)
                tasks.append((inst, mode, params, order))
    return tasks


def run_suite(filter: str | None = None, seed: int = 1, trials: int = 0,
              modes: tuple[str, ...] | None = None, workers: int = 1,
              tol: Tolerance = DEFAULT_TOLERANCE) -> list[CheckReport]:
    """Run canonical points plus ``trials`` seeded draws for every matching identity.

    Failures (including errors raised by a check) come back as failed
    reports.  Output order is the registry order whatever ``workers`` is.
    """
    tasks = suite_tasks(filter, seed, trials, modes)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda task: _execute(task, tol), tasks))
    return [_execute(task, tol) for task in tasks]
