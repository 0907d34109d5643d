import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hsl.errors import DomainError, UsageError
from hsl.fps import (
    CATALOG,
    TruncatedSeries,
    binomial_transform,
    catalog_series,
    euler_transform,
    euler_transform_direct,
    gaussian_egf,
    geometric,
    series_add,
    series_compose,
    series_mul,
    series_scale,
)
from hsl.kernels import SequenceSpec, binom_general, harmonic, hermite_eval, laguerre_eval

from conftest import rationals

S = TruncatedSeries


def zeros(n):
    return [Fraction(0)] * n


# ---------------------------------------------------------------- arithmetic


def test_product_of_conjugates():
    assert list(series_mul(S([1, 1, 0, 0]), S([1, -1, 0, 0]))) == [1, 0, -1, 0]


def test_add_zero_is_identity():
    a = S([Fraction(1, 3), 2, -5])
    assert series_add(a, S.zero(2)) == a


def test_geometric_times_one_minus_t():
    n = 12
    # geometric-series oracle: (sum t^n)(1 - t) telescopes to 1
    assert list(series_mul(S([1] * (n + 1)), S([1, -1] + [0] * (n - 1)))) == [1] + [0] * n


def test_truncation_to_min_order():
    a, b = S([1, 2, 3, 4]), S([5, 6])
    assert (a + b).order == 1
    assert (a * b).order == 1
    assert list(a * b) == [5, 16]


def test_field_mismatch():
    with pytest.raises(UsageError):
        S([1, 2]) + S([1.0, 2.0])
    with pytest.raises(UsageError):
        series_scale(S([1, 2]), 0.5)
    with pytest.raises(UsageError):
        S([1, 2], "exact") if False else S([0.5], "exact")


def test_complex_field():
    a = S([1.0, 2j])
    assert a.field == "complex"
    assert list(a * a) == [1.0, 4j]
    assert list(series_scale(a, 2)) == [2.0, 4j]


def test_div_and_mul_t():
    a = S([0, 0, 3, 4])
    assert list(a.div_t(2)) == [3, 4]
    assert a.div_t(2).mul_t(2) == a
    with pytest.raises(DomainError):
        S([1, 2]).div_t()


# ---------------------------------------------------------------- composition


def test_compose_identity():
    inner = S([0, Fraction(2, 3), -1, 5])
    assert series_compose(S([0, 1, 0, 0]), inner) == inner


def test_compose_geometric_of_t_over_1_plus_t():
    # 1 / (1 - t/(1+t)) = 1 + t
    inner = S([0] + [(-1) ** (k + 1) for k in range(1, 9)])
    assert list(series_compose(geometric(8), inner)) == [1, 1] + [0] * 7


def test_compose_needs_zero_constant():
    with pytest.raises(DomainError):
        series_compose(geometric(3), S([1, 1, 0, 0]))


def test_landen_coefficientwise():
    n = 32
    inner = S([0] + [(-1) ** (k + 1) for k in range(1, n + 1)])
    lhs = -series_compose(catalog_series("li2", {}, n), inner)
    assert lhs == catalog_series("li2-neg-plus-half-logsq", {}, n)


def test_li2_neg_plus_half_logsq_generates_alternating_harmonic_over_k():
    f = catalog_series("li2-neg-plus-half-logsq", {}, 20)
    assert list(f) == [0] + [(-1) ** k * harmonic(k) / k for k in range(1, 21)]


# ---------------------------------------------------------------- Euler transform


def test_euler_constant_one():
    # constant sequence a_k = 1 collapses to (1 - 1)^n
    assert list(euler_transform(S([1] * 7), 1, -1)) == [1] + [0] * 6
    # the constant function f = 1 gives the geometric prefactor alone
    assert list(euler_transform(S([1] + zeros(6)), 1, -1)) == [1] * 7


def test_euler_binom_p():
    f = catalog_series("binom-p", {"p": 2}, 8)
    assert list(euler_transform(f, 1, -1)) == [1, -2, 1] + [0] * 6


def test_euler_exp_gives_laguerre():
    out = euler_transform(catalog_series("exp-z", {"z": 1}, 10), 1, -1)
    assert list(out[:3]) == [1, 0, Fraction(-1, 2)]
    assert list(out) == [laguerre_eval(n, 1) for n in range(11)]


@pytest.mark.parametrize("lam,mu", [(1, 1), (1, -1), (Fraction(2, 3), Fraction(-5, 2)), (0, 3)])
def test_euler_composition_vs_direct_sum(lam, mu):
    rng = random.Random(7)
    f = S([Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(16)])
    assert euler_transform(f, lam, mu) == euler_transform_direct(f, lam, mu)


def test_euler_complex_field():
    f = S([1.0, 0.5j, 0.25, 0.0])
    a = euler_transform(f, 1, -1)
    b = euler_transform_direct(f, 1, -1)
    assert all(abs(x - y) < 1e-14 for x, y in zip(a, b))


# ---------------------------------------------------------------- binomial transform


def test_bt_of_ones():
    assert binomial_transform([1] * 6).values == (1, 0, 0, 0, 0, 0)


def test_bt_one_over_k_plus_1_fixed():
    a = [Fraction(1, k + 1) for k in range(20)]
    assert list(binomial_transform(a).values) == a


def test_bt_one_over_k_gives_minus_harmonic():
    a = [Fraction(0)] + [Fraction(1, k) for k in range(1, 8)]
    assert list(binomial_transform(a).values)[:4] == [0, -1, Fraction(-3, 2), Fraction(-11, 6)]


def test_bt_direction_and_source():
    seq = SequenceSpec("harmonic")
    out = binomial_transform(seq.terms(5), "inverse", source=seq)
    assert out.direction == "inverse" and out.source is seq
    with pytest.raises(UsageError):
        binomial_transform([1], "sideways")


@settings(max_examples=60)
@given(st.lists(rationals(50, 30), min_size=1, max_size=64))
def test_bt_involution(a):
    assert list(binomial_transform(binomial_transform(a)).values) == a


@settings(max_examples=60)
@given(st.lists(rationals(50, 30), min_size=1, max_size=32))
def test_euler_matches_bt(a):
    assert list(euler_transform(S(a), 1, -1)) == list(binomial_transform(a).values)


@pytest.mark.parametrize("n", [4, 16, 33])
def test_harmonic_over_k_plus_1(n):
    a = [harmonic(k) / (k + 1) for k in range(n + 1)]
    assert list(binomial_transform(a).values) == [-harmonic(k) / (k + 1) for k in range(n + 1)]


def test_bt_harmonic_gives_minus_one_over_n():
    b = binomial_transform([harmonic(k) for k in range(33)]).values
    assert b[0] == 0
    assert list(b[1:]) == [Fraction(-1, n) for n in range(1, 33)]


@pytest.mark.parametrize("z", [Fraction(1), Fraction(-2, 3), Fraction(7, 5)])
def test_bt_laguerre_gives_exponential_terms(z):
    b = binomial_transform([laguerre_eval(k, z) for k in range(25)]).values
    assert list(b) == [z**n / math.factorial(n) for n in range(25)]


# ---------------------------------------------------------------- catalog


def test_catalog_examples():
    assert list(catalog_series("neg-log1m-over-t", {}, 3)) == [1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)]
    assert list(catalog_series("log1m-over-1m", {}, 3)) == [0, -1, Fraction(-3, 2), Fraction(-11, 6)]


def test_half_log_sq_against_squaring_oracle():
    n = 10
    log1p = [Fraction(0)] + [Fraction((-1) ** (k + 1), k) for k in range(1, n + 2)]
    # square by explicit double loop, then divide by -2t
    sq = [sum((log1p[i] * log1p[j - i] for i in range(j + 1)), Fraction(0)) for j in range(n + 2)]
    oracle = [-sq[j + 1] / 2 for j in range(n + 1)]
    got = list(catalog_series("half-log-sq-1p-over-neg2t", {}, n))
    assert got == oracle
    assert got[:3] == [0, Fraction(-1, 2), Fraction(1, 2)]
    assert got == [(-1) ** k * harmonic(k) / (k + 1) for k in range(n + 1)]


def test_reflection_of_half_log_sq():
    n = 32
    f = catalog_series("half-log-sq-1p-over-neg2t", {}, n)
    assert -f.rescale(-1) == euler_transform(f, 1, 1)


@pytest.mark.parametrize("n", [1, 8, 32])
def test_neg_log1m_over_t_fixed_point(n):
    f = catalog_series("neg-log1m-over-t", {}, n)
    assert euler_transform(f, 1, -1) == f


def test_neg_li2_over_1m_is_minus_harmonic2():
    g = catalog_series("neg-li2-over-1m", {}, 32)
    assert list(g) == [-harmonic(n, 2) for n in range(33)]
    f = catalog_series("li2-neg-plus-half-logsq", {}, 32)
    assert euler_transform(f, 1, 1) == g


def test_log1m_over_1m_is_euler_of_neg_log1m():
    f = catalog_series("neg-log1m", {}, 32)
    assert euler_transform(f, 1, -1) == catalog_series("log1m-over-1m", {}, 32)


def test_binom_p_coefficients():
    p = Fraction(3, 2)
    f = catalog_series("binom-p", {"p": p}, 10)
    assert list(f) == [binom_general(p + k, k) for k in range(11)]
    g = catalog_series("binom-p", {"p": "3/2"}, 10)
    assert g == f


def test_binom_p_complex():
    f = catalog_series("binom-p", {"p": 0.5 + 1j}, 5)
    assert f.field == "complex"
    assert f[2] == pytest.approx(binom_general(2.5 + 1j, 2))


def test_catalog_names_complete():
    assert set(CATALOG) == {
        "neg-log1m-over-t", "neg-log1m", "log1m-over-1m", "half-log-sq-1p-over-neg2t", "li2",
        "li2-neg-plus-half-logsq", "neg-li2-over-1m", "binom-p", "exp-z", "geometric",
    }
    for name in CATALOG:
        params = {"p": 2} if name == "binom-p" else {"z": 1} if name == "exp-z" else {}
        s = catalog_series(name, params, 6)
        assert s.order == 6 and s.field == "exact"


def test_catalog_unknown():
    with pytest.raises(UsageError):
        catalog_series("zeta", {}, 3)
    with pytest.raises(UsageError):
        catalog_series("exp-z", {}, 3)


def test_gaussian_egf_is_hermite_egf():
    x = Fraction(2, 7)
    e = gaussian_egf(x, 20)
    assert list(e) == [hermite_eval(n, x) / math.factorial(n) for n in range(21)]
    s = Fraction(3, 5)
    e2 = gaussian_egf(x, 12, s)
    assert list(e2) == [hermite_eval(n, x) * s**n / math.factorial(n) for n in range(13)]
