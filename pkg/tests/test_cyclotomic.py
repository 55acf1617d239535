from fractions import Fraction

import pytest

from cyclo.cyclotomic import cyclotomic_poly, deriv_at_1, deriv_ratio, phi_at_1
from cyclo.ntkernel import divisors, euler_phi
from cyclo.upoly import UniPoly, product
from oracles import cyclotomic_by_iterated_division, cyclotomic_by_roots, derivative_at_1_by_taylor_shift


@pytest.mark.parametrize(
    "n, text", [(1, "x - 1"), (5, "x^4 + x^3 + x^2 + x + 1"), (12, "x^4 - x^2 + 1"), (2, "x + 1")]
)
def test_cyclotomic_examples(n, text):
    assert str(cyclotomic_poly(n).poly) == text


def test_record_invariants():
    for n in range(1, 301):
        rec = cyclotomic_poly(n)
        assert rec.n == n
        assert rec.phi_n == rec.poly.degree == euler_phi(n)
        assert rec.poly.is_monic() and rec.poly.is_integral()
        if n >= 2:
            assert rec.value_at_1 == phi_at_1(n)


def test_divisor_product_is_x_n_minus_1():
    for n in range(1, 301):
        assert product([cyclotomic_poly(d).poly for d in divisors(n)]) == UniPoly.monomial(n) - 1


def test_against_iterated_division_and_roots():
    for n in range(1, 301):
        assert list(cyclotomic_poly(n).poly.coeffs) == cyclotomic_by_iterated_division(n)
    for n in range(1, 60):
        assert list(cyclotomic_poly(n).poly.coeffs) == cyclotomic_by_roots(n)


@pytest.mark.parametrize("n, expected", [(9, 3), (6, 1), (2, 2), (16, 2), (30, 1), (49, 7)])
def test_phi_at_1_examples(n, expected):
    assert phi_at_1(n) == expected


def test_phi_at_1_rejects_small_n():
    for n in (0, 1):
        with pytest.raises(ValueError):
            phi_at_1(n)
    with pytest.raises(ValueError):
        deriv_ratio(1, 0)


@pytest.mark.parametrize("n, k, expected", [(5, 1, 10), (5, 3, 30), (5, 4, 24), (5, 5, 0), (1, 0, 0), (1, 1, 1)])
def test_deriv_at_1_examples(n, k, expected):
    assert deriv_at_1(n, k) == expected


def test_deriv_zeroth_is_value():
    for n in range(2, 100):
        assert deriv_at_1(n, 0) == phi_at_1(n)
        assert deriv_ratio(n, 0) == 1


def test_deriv_against_taylor_shift():
    for n in range(1, 121):
        coeffs = cyclotomic_by_iterated_division(n)
        for k in range(0, 14):
            assert deriv_at_1(n, k) == derivative_at_1_by_taylor_shift(coeffs, k)


def test_deriv_ratio_examples():
    assert deriv_ratio(5, 3) == 6
    assert deriv_ratio(3, 2) == Fraction(2, 3)
