"""Cyclotomic polynomials and brute-force derivative values at ``x = 1``.

Nothing here depends on the Lehmer layer, so these values serve as the
reference against which the polynomial identities are checked.
"""

import functools
from dataclasses import dataclass
from fractions import Fraction

from cyclo.ntkernel import factorize, jordan_totient
from cyclo.upoly import UniPoly, mobius_product


@dataclass(frozen=True)
class CyclotomicRecord:
    n: int
    poly: UniPoly
    phi_n: int
    value_at_1: int


def _x_pow_minus_one(d: int) -> UniPoly:
    return UniPoly.monomial(d) - 1


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> CyclotomicRecord:
    """Build ``Phi_n = prod_{d | n} (x^d - 1)^mu(n/d)``."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    poly = mobius_product(n, _x_pow_minus_one)
    return CyclotomicRecord(n, poly, poly.degree, int(poly.eval(1)))


def phi_at_1(n: int) -> int:
    """``Phi_n(1)``: ``p`` when ``n`` is a power of the prime ``p``, else 1."""
    if n < 2:
        raise ValueError(f"Phi_n(1) ratios need n >= 2, got {n}")
    pairs = factorize(n)
    return pairs[0][0] if len(pairs) == 1 else 1


@functools.lru_cache(maxsize=None)
def _derivative_chain(n: int, k: int) -> UniPoly:
    if k == 0:
        return cyclotomic_poly(n).poly
    return _derivative_chain(n, k - 1).derivative()


def deriv_at_1(n: int, k: int) -> int:
    """``Phi_n^{(k)}(1)`` by formal differentiation followed by evaluation."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k > cyclotomic_poly(n).phi_n:
        return 0
    value = _derivative_chain(n, k).eval(1)
    return int(value)


def deriv_ratio(n: int, k: int) -> Fraction:
    """Exact ``Phi_n^{(k)}(1) / Phi_n(1)``; not necessarily an integer."""
    return Fraction(deriv_at_1(n, k), phi_at_1(n))


def totient_point(n: int, k: int) -> dict:
    """Assignment ``x_j -> J_j(n) / (2j)`` for ``j = 1..k``."""
    return {j: Fraction(jordan_totient(j, n), 2 * j) for j in range(1, k + 1)}
