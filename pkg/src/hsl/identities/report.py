"""Check reports, the tolerance policy and their serialized forms."""

from __future__ import annotations

import cmath
import csv
import io
import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

NUMERIC = "numeric"
EXACT = "exact"
CLOSED_FORM = "closed-form"

SCHEMA_FIELDS = (
    "id",
    "mode",
    "params",
    "order",
    "lhs",
    "rhs",
    "residual_abs",
    "residual_rel",
    "tail_estimate",
    "passed",
    "elapsed_ms",
)


@dataclass(frozen=True)
class Tolerance:
    """Numeric pass policy.

    A numeric check passes when ``abs <= max(abs_floor, tail_factor * tail)``
    and, for ``|lhs| > rel_guard``, ``rel <= rel_tol``.
    """

    abs_floor: float = 1e-12
    tail_factor: float = 10.0
    rel_tol: float = 1e-8
    rel_guard: float = 1e-6


DEFAULT_TOLERANCE = Tolerance()


@dataclass
class CheckReport:
    id: str
    mode: str
    params: dict
    order: int
    lhs: Any
    rhs: Any
    residual_abs: float
    residual_rel: float
    tail_estimate: float | None
    passed: bool
    elapsed_ms: float | None = None

    def to_dict(self, timing: bool = True) -> dict:
        d = {name: encode_value(getattr(self, name)) for name in SCHEMA_FIELDS}
        if not timing:
            d["elapsed_ms"] = None
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        return cls(**{name: decode_value(d[name]) for name in SCHEMA_FIELDS})

    @classmethod
    def from_json(cls, line: str) -> "CheckReport":
        return cls.from_dict(json.loads(line))


# ---------------------------------------------------------------- verdicts


def _finite(v) -> bool:
    if isinstance(v, complex):
        return cmath.isfinite(v)
    return math.isfinite(v)


def numeric_verdict(lhs, rhs, tail: float, tol: Tolerance = DEFAULT_TOLERANCE):
    """``(residual_abs, residual_rel, passed)`` under the numeric policy."""
    if not (_finite(lhs) and _finite(rhs) and math.isfinite(tail)):
        return math.inf, math.inf, False
    res = abs(lhs - rhs)
    size = abs(lhs)
    rel = res / size if size else res
    ok = res <= max(tol.abs_floor, tol.tail_factor * tail)
    if size > tol.rel_guard:
        ok = ok and rel <= tol.rel_tol
    return res, rel, ok


def exact_verdict(lhs: list, rhs: list):
    """Literal equality of coefficient vectors; residuals for information only."""
    if len(lhs) != len(rhs):
        return math.inf, math.inf, False
    diff = max((abs(a - b) for a, b in zip(lhs, rhs)), default=Fraction(0))
    size = max((abs(a) for a in lhs), default=Fraction(0))
    res = float(diff)
    rel = float(diff / size) if size else res
    return res, rel, lhs == rhs


# ---------------------------------------------------------------- encoding

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def encode_value(v):
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    if isinstance(v, (int, float)):
        return v
    if isinstance(v, (list, tuple)):
        return [encode_value(x) for x in v]
    if isinstance(v, dict):
        return {k: encode_value(x) for k, x in v.items()}
    raise TypeError(f"cannot encode {type(v).__name__}")


def decode_value(v):
    if isinstance(v, str):
        return Fraction(v) if _RATIONAL.match(v) else v
    if isinstance(v, list):
        return [decode_value(x) for x in v]
    if isinstance(v, dict):
        if set(v) == {"re", "im"}:
            return complex(v["re"], v["im"])
        return {k: decode_value(x) for k, x in v.items()}
    return v


def _fmt_value(v) -> str:
    if isinstance(v, complex):
        return f"{v.real:.16g}{v.imag:+.16g}i"
    if isinstance(v, float):
        return f"{v:.16g}"
    if isinstance(v, list):
        return f"[{len(v)} coeffs]"
    return str(v)


def format_text(report: CheckReport, timing: bool = False) -> str:
    params = " ".join(f"{k}={_fmt_value(v)}" for k, v in report.params.items())
    tail = "-" if report.tail_estimate is None else f"{report.tail_estimate:.2e}"
    line = (
        f"{'PASS' if report.passed else 'FAIL'}  {report.id:<21} {report.mode:<11} "
        f"N={report.order:<3} abs={report.residual_abs:.3e} rel={report.residual_rel:.3e} "
        f"tail={tail}  lhs={_fmt_value(report.lhs)} rhs={_fmt_value(report.rhs)}"
    )
    if params:
        line += f"  [{params}]"
    if timing and report.elapsed_ms is not None:
        line += f"  {report.elapsed_ms:.1f}ms"
    return line


def format_csv(reports, timing: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SCHEMA_FIELDS)
    for r in reports:
        d = r.to_dict(timing)
        row = []
        for name in SCHEMA_FIELDS:
            v = d[name]
            if isinstance(v, (dict, list)):
                row.append(json.dumps(v, ensure_ascii=False))
            elif v is None:
                row.append("")
            elif isinstance(v, bool):
                row.append("true" if v else "false")
            else:
                row.append(repr(v) if isinstance(v, float) else str(v))
        w.writerow(row)
    return buf.getvalue()
