"""Exact computation and verification of derivative identities for cyclotomic polynomials."""

from fractions import Fraction

from cyclo.ntkernel import (
    bernoulli,
    binomial,
    divisors,
    factorize,
    falling_factorial,
    jordan_totient,
    mobius,
    stirling_first,
)
from cyclo.upoly import NonDivisible, UniPoly, mobius_product
from cyclo.mpoly import MultiPoly, UnassignedVariable
from cyclo.fps import NonzeroConstantTerm, OrderMismatch, TruncSeries
from cyclo.cyclotomic import cyclotomic_poly, deriv_at_1, deriv_ratio, phi_at_1
from cyclo.report import Counterexample, VerificationReport

__all__ = [
    "Fraction",
    "bernoulli",
    "binomial",
    "divisors",
    "factorize",
    "falling_factorial",
    "jordan_totient",
    "mobius",
    "stirling_first",
    "NonDivisible",
    "UniPoly",
    "mobius_product",
    "MultiPoly",
    "UnassignedVariable",
    "NonzeroConstantTerm",
    "OrderMismatch",
    "TruncSeries",
    "cyclotomic_poly",
    "deriv_at_1",
    "deriv_ratio",
    "phi_at_1",
    "Counterexample",
    "VerificationReport",
]
