"""Acceptance criteria, one test each.

Run with ``pytest tests/test_acceptance.py -s`` to see the PASS/FAIL lines.
"""

import random
import subprocess
import sys
import time
from fractions import Fraction

from hsl.fps import TruncatedSeries, binomial_transform, euler_transform
from hsl.identities import (
    closed_form_check,
    closed_form_rhs_terms,
    coefficient_check,
    corollary_check,
    get_identity,
    mehler_check,
    mehler_closed_form,
    theorem1_check,
)
from hsl.identities.checks import COROLLARIES
from hsl.kernels import hermite_poly, hermite_rodrigues_oracle, stirling_function


def verdict(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    print(line + (f"  ({detail})" if detail else ""))
    assert ok, line + " " + detail


def _classical_stirling(m):
    table = [[0] * (m + 1) for _ in range(m + 1)]
    table[0][0] = 1
    for i in range(1, m + 1):
        for j in range(1, i + 1):
            table[i][j] = table[i - 1][j - 1] + j * table[i - 1][j]
    return table


def _numeric_ok(r):
    return r.passed and r.residual_abs <= max(1e-12, 10 * r.tail_estimate) and r.residual_rel <= 1e-8


def test_exact_coefficient_suite():
    start = time.perf_counter()
    failures = []
    for id_ in ("landen", "genfunc-2.8", "genfunc-2.13", "genfunc-2.20", "addition-2.27", "vandermonde-2.33", "inversion-involution"):
        inst = get_identity(id_)
        params = next(P for mode, P, _ in inst.canonical if mode == "exact")
        r = inst.run("exact", params, order=32)
        if not (r.passed and r.lhs == r.rhs and r.order == 32):
            failures.append(id_)
    for cid, params in (("cor1", {"x": Fraction(1, 2)}), ("cor6", {"z": 1, "x": Fraction(1, 3)}), ("cor9", {"p": 2, "x": Fraction(1, 3)})):
        r = coefficient_check(cid, params, 32)
        if not (r.passed and r.lhs == r.rhs and all(isinstance(c, Fraction) for c in r.lhs)):
            failures.append(cid)
    elapsed = time.perf_counter() - start
    verdict(1, "exact coefficient suite to order 32", not failures and elapsed < 30, f"{elapsed:.2f}s failures={failures}")


def test_numeric_corollary_suite():
    start = time.perf_counter()
    cases = [(f"cor{i}", {}) for i in range(1, 6)] + [
        ("cor6", {"z": 0.5}), ("cor7", {"z": 0.5}), ("cor8", {"z": 0.5, "y": 0.3}), ("cor9", {"p": 3}),
        ("cor10", {"alpha": 3}), ("cor10", {"alpha": 0.5}), ("cor10", {"alpha": 1 + 1j}),
    ]
    failures = [(cid, p) for cid, p in cases if not _numeric_ok(corollary_check(cid, p, 0.3, 0.1, 40))]
    elapsed = time.perf_counter() - start
    verdict(2, "numeric corollaries at canonical points", not failures and elapsed < 10, f"{elapsed:.2f}s failures={failures}")


def test_closed_forms():
    failures = []
    for kind in ("binom-p", "stirling-m"):
        for m in (1, 2, 3):
            r = closed_form_check(kind, m, 0.3, 0.1, 50)
            terms = closed_form_rhs_terms(kind, m, 0.3, 0.1)[1]
            if not (r.passed and r.residual_abs <= 1e-12 and len(terms) == m + 1):
                failures.append((kind, m, r.residual_abs))
    verdict(3, "finite closed forms at 1e-12", not failures, f"failures={failures}")


def test_mehler_cross_validation():
    x, z, t = 0.2, 0.4, 0.1
    closed = mehler_closed_form(x, z, t)
    base = mehler_check(x, z, t, 40)
    ok = base.residual_rel <= 1e-10 and base.rhs == closed
    for y in (0.1, 0.3):
        r = mehler_check(x, z, t, 40, y=y)
        ok = ok and abs(r.lhs - closed) <= 10 * r.tail_estimate + 1e-12 and r.passed
    r0 = mehler_check(x, z, t, 40, y=0.0)
    ok = ok and (r0.lhs, r0.rhs, r0.residual_abs) == (base.lhs, base.rhs, base.residual_abs)
    verdict(4, "Mehler and its shifted form", ok, f"rel={base.residual_rel:.2e}")


def test_oracle_equivalence():
    hermite_ok = all(hermite_poly(n) == hermite_rodrigues_oracle(n) for n in range(26))
    table = _classical_stirling(12)
    stirling_ok = all(
        stirling_function(m, n) == table[m][n] for m in range(1, 13) for n in range(1, m + 1)
    )
    verdict(5, "recurrences equal symbolic oracles", hermite_ok and stirling_ok)


def test_transform_involution():
    rng = random.Random(2024)
    failures = 0
    for _ in range(200):
        a = [Fraction(rng.randint(-99, 99), rng.randint(1, 40)) for _ in range(rng.randint(1, 32))]
        b = list(binomial_transform(a).values)
        if list(binomial_transform(b).values) != a:
            failures += 1
        if list(euler_transform(TruncatedSeries(a), 1, -1).coeffs) != b:
            failures += 1
    verdict(6, "binomial transform involution and Euler agreement", failures == 0, f"{failures} mismatches")


def test_dual_path_consistency():
    params = {"cor2": {}, "cor4": {}, "cor5": {}, "cor9": {"p": 3}}
    worst = 0.0
    for cid, p in params.items():
        direct = corollary_check(cid, p, 0.3, 0.1, 40)
        cor = COROLLARIES[cid]
        generic = theorem1_check(cor.sequence(p), 0.3, 0.1, 40)
        worst = max(worst, abs(direct.residual_abs - generic.residual_abs))
        # both paths must be summing the same series, not merely two small residuals
        same_series = abs(direct.lhs - generic.lhs) <= 1e-13 * abs(direct.lhs)
        worst = worst if same_series else float("inf")
    verdict(7, "dual-path residual agreement", worst <= 1e-12, f"max diff {worst:.2e}")


def test_determinism():
    argv = [sys.executable, "-m", "hsl", "suite", "--seed", "1", "--trials", "5", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=False)
    second = subprocess.run(argv, capture_output=True, check=False)
    ok = first.returncode == 0 and first.stdout == second.stdout and len(first.stdout) > 0
    verdict(8, "suite output byte-identical across runs", ok, f"{len(first.stdout)} bytes")
