import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclo.fps import TruncSeries
from cyclo.ntkernel import (
    bernoulli,
    binomial,
    divisors,
    factorize,
    falling_factorial,
    is_prime,
    jordan_totient,
    jordan_totient_divisor_sum,
    mobius,
    stirling_first,
)
from cyclo.upoly import UniPoly
from oracles import bernoulli_by_series_inversion, jordan_by_counting, stirling_by_cycles


@pytest.mark.parametrize("n, expected", [(1, []), (12, [(2, 2), (3, 1)]), (97, [(97, 1)])])
def test_factorize_examples(n, expected):
    assert factorize(n) == expected


@given(st.integers(min_value=1, max_value=10**6))
def test_factorize_multiplies_back(n):
    pairs = factorize(n)
    assert math.prod(p**e for p, e in pairs) == n
    assert [p for p, _ in pairs] == sorted({p for p, _ in pairs})
    assert all(all(p % d for d in range(2, math.isqrt(p) + 1)) for p, _ in pairs)


def test_zero_is_rejected():
    for fn in (factorize, mobius, divisors):
        with pytest.raises(ValueError):
            fn(0)
    with pytest.raises(ValueError):
        jordan_totient(0, 5)
    with pytest.raises(ValueError):
        jordan_totient(1, 0)


@pytest.mark.parametrize("n, expected", [(1, 1), (4, 0), (30, -1), (7, -1), (6, 1)])
def test_mobius_examples(n, expected):
    assert mobius(n) == expected


def test_mobius_divisor_sum_vanishes():
    for n in range(1, 501):
        assert sum(mobius(n // d) for d in divisors(n)) == (1 if n == 1 else 0)


@pytest.mark.parametrize("k, n, expected", [(1, 5, 4), (2, 3, 8), (2, 4, 12)])
def test_jordan_examples(k, n, expected):
    assert jordan_totient(k, n) == expected


def test_jordan_forms_agree():
    for k in range(1, 7):
        for n in range(1, 501):
            assert jordan_totient(k, n) == jordan_totient_divisor_sum(k, n)


def test_jordan_matches_tuple_count():
    for k in range(1, 4):
        for n in range(1, 13 if k < 3 else 9):
            assert jordan_totient(k, n) == jordan_by_counting(k, n)


def test_jordan_even_for_n_at_least_3():
    for k in range(1, 7):
        for n in range(3, 501):
            assert jordan_totient(k, n) % 2 == 0


@pytest.mark.parametrize(
    "m, expected", [(0, Fraction(1)), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (3, Fraction(0))]
)
def test_bernoulli_examples(m, expected):
    assert bernoulli(m) == expected


def test_bernoulli_against_series_inversion():
    assert [bernoulli(m) for m in range(41)] == bernoulli_by_series_inversion(40)
    assert all(bernoulli(m) == 0 for m in range(3, 41, 2))


def test_bernoulli_generating_series_identities():
    n = 30
    egf = TruncSeries([bernoulli(m) / math.factorial(m) for m in range(n + 1)], n)
    # (e^t - 1)/t
    shifted = TruncSeries([Fraction(1, math.factorial(i + 1)) for i in range(n + 1)], n)
    assert egf * shifted == TruncSeries.one(n)

    # log(sinh(t/2) / (t/2)) = sum_{n>=2} B_n/n t^n/n!
    sinh_ratio = TruncSeries(
        [Fraction(1, 4**(i // 2) * math.factorial(i + 1)) if i % 2 == 0 else 0 for i in range(n + 1)], n
    )
    lhs = (sinh_ratio - 1).log1p()
    rhs = TruncSeries([0, 0] + [bernoulli(m) / (m * math.factorial(m)) for m in range(2, n + 1)], n)
    assert lhs == rhs


@pytest.mark.parametrize("n, k, expected", [(0, 0, 1), (3, 2, 3), (4, 1, 6), (3, 5, 0)])
def test_stirling_examples(n, k, expected):
    assert stirling_first(n, k) == expected


def test_stirling_counts_cycles():
    for n in range(7):
        for k in range(n + 1):
            assert stirling_first(n, k) == stirling_by_cycles(n, k)


def test_stirling_generating_series():
    order = 20
    minus_log = -(TruncSeries((0, -1), order).log1p())  # -log(1 - t)
    for k in range(9):
        lhs = (minus_log**k).scale(Fraction(1, math.factorial(k)))
        rhs = TruncSeries([Fraction(stirling_first(n, k), math.factorial(n)) for n in range(order + 1)], order)
        assert lhs == rhs


def test_falling_factorial_expansion():
    x = UniPoly.x()
    for n in range(11):
        expected = UniPoly([(-1) ** (n + k) * stirling_first(n, k) for k in range(n + 1)])
        assert falling_factorial(x, n) == expected


@pytest.mark.parametrize("n, k, expected", [(5, 2, 10), (-1, 3, -1), (7, 0, 1), (-4, 0, 1), (3, 5, 0)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_rational_upper():
    assert binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binomial(Fraction(-1, 2), 3) == Fraction(-5, 16)


def test_is_prime():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
