"""Command-line front end.

    hsl check --id cor9 --p 3 --x 0.3 --t 0.1 --order 40 --format json
    hsl suite --seed 1 --trials 5 --format csv
    hsl series log1m-over-1m --order 8
    hsl table stirling --m 4

Exit status: 0 all checks passed, 1 some check failed, 2 usage or
configuration error.  Rational parameters are accepted as ``p/q`` (this is
what makes exact mode reachable); decimals imply numeric mode; complex
values are written ``a+bi``.  ``HSL_OUT`` names a default directory for
report files when ``--output`` is not given.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import fps, kernels
from .errors import HSLError
from .identities import (
    CLOSED_FORM,
    EXACT,
    NUMERIC,
    Tolerance,
    format_csv,
    format_text,
    get_identity,
    identity_ids,
    run_suite,
)
from .identities.report import encode_value

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")

PARAM_FLAGS = ("x", "t", "z", "y", "p", "alpha", "c", "m", "n")


class CLIUsageError(Exception):
    pass


def parse_value(text: str):
    """``"1/3"`` -> Fraction, ``"0.3"`` -> float, ``"1+2i"`` -> complex."""
    s = text.strip().replace(" ", "")
    if _RATIONAL.match(s):
        return Fraction(s)
    if s.endswith("i"):
        body = s[:-1]
        if not body or body[-1] in "+-":
            body += "1"
        try:
            return complex(body + "j")
        except ValueError:
            raise CLIUsageError(f"cannot parse {text!r} as a complex number") from None
    try:
        return float(s)
    except ValueError:
        raise CLIUsageError(f"cannot parse {text!r} as a number") from None


def _is_decimal(v) -> bool:
    return isinstance(v, (float, complex))


# ---------------------------------------------------------------- output


def _render(reports, fmt: str, timing: bool) -> str:
    if fmt == "json":
        return "".join(r.to_json(timing) + "\n" for r in reports)
    if fmt == "csv":
        return format_csv(reports, timing)
    return "".join(format_text(r, timing) + "\n" for r in reports)


def _summary(reports) -> str:
    passed = sum(r.passed for r in reports)
    return f"summary: {len(reports)} checks, {passed} passed, {len(reports) - passed} failed"


def _emit(text: str, args, default_name: str) -> None:
    path = args.output
    if path is None and os.environ.get("HSL_OUT"):
        ext = {"json": "jsonl", "csv": "csv"}.get(getattr(args, "format", "text"), "txt")
        path = Path(os.environ["HSL_OUT"]) / f"{default_name}.{ext}"
    if path is None:
        sys.stdout.write(text)
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}", file=sys.stderr)


def _tolerance(args) -> Tolerance:
    base = Tolerance()
    return Tolerance(
        abs_floor=base.abs_floor if args.abs_tol is None else args.abs_tol,
        tail_factor=base.tail_factor if args.tail_factor is None else args.tail_factor,
        rel_tol=base.rel_tol if args.rel_tol is None else args.rel_tol,
    )


def _modes_for(mode: str):
    if mode == "numeric":
        return (NUMERIC, CLOSED_FORM)
    if mode == "exact":
        return (EXACT,)
    return None


# ---------------------------------------------------------------- commands


def cmd_check(args) -> int:
    if args.id not in identity_ids():
        raise CLIUsageError(f"unknown identity {args.id!r}; known ids: {', '.join(identity_ids())}")
    inst = get_identity(args.id)
    given = {}
    for name in PARAM_FLAGS:
        raw = getattr(args, name)
        if raw is not None:
            given[name] = parse_value(raw)
    for name in ("sequence", "pair"):
        if getattr(args, name) is not None:
            given[name] = getattr(args, name)
    if args.seed is not None:
        given["seed"] = args.seed

    if args.mode == "auto":
        modes = [m for m in inst.modes if m != EXACT] or [EXACT]
    elif args.mode == "both":
        modes = list(inst.modes)
    else:
        wanted = _modes_for(args.mode)
        modes = [m for m in inst.modes if m in wanted]
        if not modes:
            raise CLIUsageError(f"{inst.id} has no {args.mode} mode (available: {', '.join(inst.modes)})")

    known = {p.name for p in inst.params_schema} | {"x", "t"}
    unknown = set(given) - known - {"z", "pair", "seed"}
    if unknown:
        raise CLIUsageError(f"{inst.id} does not take {', '.join(sorted(unknown))}")

    tol = _tolerance(args)
    reports = []
    for mode in modes:
        canon = next((p for m, p, _ in inst.canonical if m == mode), {})
        canon_order = next((o for m, _, o in inst.canonical if m == mode), None)
        params = {**canon, **given}
        if mode == EXACT:
            params.pop("t", None)
            bad = [k for k, v in params.items() if _is_decimal(v)]
            if bad:
                raise CLIUsageError(f"exact mode needs rational values for {', '.join(bad)} (use p/q)")
        order = args.order if args.order is not None else canon_order
        try:
            reports.append(inst.run(mode, params, order, tol, args.allow_outside))
        except (HSLError, KeyError, TypeError) as exc:
            raise CLIUsageError(str(exc)) from exc
    _emit(_render(reports, args.format, args.timing), args, f"check-{inst.id}")
    if args.format == "text":
        print(_summary(reports), file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_suite(args) -> int:
    reports = run_suite(args.filter, seed=args.seed, trials=args.trials,
                        modes=_modes_for(args.mode), workers=args.workers, tol=_tolerance(args))
    text = _render(reports, args.format, args.timing)
    if args.format == "text":
        text += _summary(reports) + "\n"
    else:
        print(_summary(reports), file=sys.stderr)
    _emit(text, args, "suite")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _series_params(args) -> dict:
    out = {}
    for name in ("p", "z"):
        raw = getattr(args, name)
        if raw is not None:
            out[name] = parse_value(raw)
    return out


def cmd_series(args) -> int:
    try:
        s = fps.catalog_series(args.name, _series_params(args), args.order)
        if args.euler is not None:
            lam, mu = (parse_value(v) for v in args.euler.split(","))
            s = fps.euler_transform(s, lam, mu)
        coeffs = list(s.coeffs)
        if args.binomial:
            coeffs = list(fps.binomial_transform(coeffs).values)
    except (HSLError, ValueError) as exc:
        raise CLIUsageError(str(exc)) from exc
    if args.format == "json":
        text = json.dumps({"name": args.name, "order": len(coeffs) - 1, "coeffs": encode_value(coeffs)}) + "\n"
    else:
        text = "".join(f"{j}\t{c}\n" for j, c in enumerate(coeffs))
    _emit(text, args, f"series-{args.name}")
    return EXIT_OK


def _table_rows(args):
    fam = args.family
    n = 5 if args.n is None else args.n
    if fam == "hermite":
        return [(k, list(kernels.hermite_poly(k).coeffs)) for k in range(n + 1)]
    if fam == "laguerre":
        z = parse_value(args.z) if args.z is not None else Fraction(1)
        return [(k, kernels.laguerre_eval(k, z)) for k in range(n + 1)]
    if fam == "harmonic":
        return [(k, v) for k, v in enumerate(kernels.harmonic_table(n, args.harmonic_order))]
    if fam == "stirling":
        if args.alpha is not None:
            alpha = parse_value(args.alpha)
            return [(k, kernels.stirling_function(alpha, k)) for k in range(n + 1)]
        m = 4 if args.m is None else args.m
        return [(k, kernels.stirling_function(m, k)) for k in range(1, m + 1)]
    if fam == "binom":
        p = parse_value(args.p) if args.p is not None else Fraction(1, 2)
        return [(k, kernels.binom_general(p, k)) for k in range(n + 1)]
    raise CLIUsageError(f"unknown family {fam!r}")


def cmd_table(args) -> int:
    try:
        rows = _table_rows(args)
    except HSLError as exc:
        raise CLIUsageError(str(exc)) from exc
    if args.format == "json":
        text = json.dumps({"family": args.family, "rows": [[k, encode_value(v)] for k, v in rows]}) + "\n"
    else:
        def cell(v):
            return " ".join(str(c) for c in v) if isinstance(v, list) else str(v)
        text = "".join(f"{k}\t{cell(v)}\n" for k, v in rows)
    _emit(text, args, f"table-{args.family}")
    return EXIT_OK


# ---------------------------------------------------------------- parser


def _common(p: argparse.ArgumentParser, formats=("text", "json", "csv")):
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--output", help="write to this file instead of stdout")


def _tol_flags(p):
    p.add_argument("--abs-tol", type=float, help="absolute residual floor (default 1e-12)")
    p.add_argument("--rel-tol", type=float, help="relative residual bound (default 1e-8)")
    p.add_argument("--tail-factor", type=float, help="multiplier on the tail estimate (default 10)")
    p.add_argument("--timing", action="store_true", help="include elapsed_ms (breaks byte-identical output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hsl", description="Hermite series identity checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run one identity")
    p.add_argument("--id", required=True)
    for name in PARAM_FLAGS:
        p.add_argument(f"--{name}")
    p.add_argument("--sequence", help="sequence kind (lemma1)")
    p.add_argument("--pair", help="inversion-involution pair")
    p.add_argument("--seed", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--mode", choices=("auto", "numeric", "exact", "both"), default="auto")
    p.add_argument("--allow-outside", action="store_true", help="permit |t| outside the evaluation disk")
    _tol_flags(p)
    _common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("suite", help="run the full registry")
    p.add_argument("--filter", help="glob on identity ids, e.g. 'cor*'")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--mode", choices=("numeric", "exact", "both"), default="both")
    p.add_argument("--workers", type=int, default=1)
    _tol_flags(p)
    _common(p)
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("series", help="print catalog series coefficients")
    p.add_argument("name", help=", ".join(fps.CATALOG))
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--p")
    p.add_argument("--z")
    p.add_argument("--euler", metavar="LAM,MU", help="apply the Euler transform")
    p.add_argument("--binomial", action="store_true", help="apply the binomial transform")
    _common(p, ("text", "json"))
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("table", help="print values of a sequence family")
    p.add_argument("family", choices=("hermite", "laguerre", "harmonic", "stirling", "binom"))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--z")
    p.add_argument("--p")
    p.add_argument("--alpha")
    p.add_argument("--harmonic-order", type=int, choices=(1, 2), default=1)
    _common(p, ("text", "json"))
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_OK
    except CLIUsageError as exc:
        print(f"hsl {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
