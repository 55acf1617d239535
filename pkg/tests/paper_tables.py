"""s_k, F_k and Omega_m exactly as printed in the source tables, built by polynomial arithmetic."""

from fractions import Fraction

from cyclo.mpoly import MultiPoly

x1, x2, x4, x6 = (MultiPoly.var(i) for i in (1, 2, 4, 6))
third = Fraction(1, 3)

PAPER_S = {
    1: -x1,
    2: (3 * x1 - x2) * third,
    3: (2 * x1 - x2) * Fraction(-1, 2),
    4: (90 * x1 - 55 * x2 + x4) * Fraction(1, 90),
    5: (36 * x1 - 25 * x2 + x4) * Fraction(-1, 36),
}
PAPER_F = {
    0: MultiPoly.constant(1),
    1: x1,
    2: (3 * x1**2 - 3 * x1 + x2) * third,
    3: (x1 - 1) * (x1**2 - 2 * x1 + x2),
    4: (
        15 * x1**4 - 90 * x1**3 + (30 * x2 + 165) * x1**2 - (90 * x2 + 90) * x1 + 5 * x2**2 + 55 * x2 - x4
    ) * Fraction(1, 15),
    5: (x1 - 2)
    * (3 * x1**4 - 24 * x1**3 + (10 * x2 + 57) * x1**2 - (40 * x2 + 36) * x1 + 5 * x2**2 + 25 * x2 - x4)
    * third,
}
PAPER_OMEGA = {
    1: x2,
    2: x4 - 5 * x2 * (x2 - 1),
    3: x6 - 7 * x4 * (x2 - 1) + Fraction(35, 3) * x2 * (x2 - 1) * (x2 - 2) + Fraction(14, 3) * x2,
}
