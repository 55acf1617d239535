"""Lehmer polynomials s_k, F_k, Omega_m and the sinh-type polynomials V_n, W_n.

F_k is built three independent ways (partition sum, generating-series
extraction, reconstruction from Omega_m) so each can audit the others. The
``check_*`` functions compare one instance of a claim against the brute-force
values from :mod:`cyclo.cyclotomic` and return a :class:`VerificationReport`.
"""

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence

from cyclo.cyclotomic import cyclotomic_poly, deriv_at_1, deriv_ratio, phi_at_1, totient_point
from cyclo.fps import TruncSeries, arcsinh_series
from cyclo.mpoly import MultiPoly
from cyclo.ntkernel import (
    bernoulli,
    divisors,
    euler_phi,
    falling_factorial,
    is_prime,
    jordan_totient,
    stirling_first,
)
from cyclo.report import VerificationReport, merge, render_value
from cyclo.upoly import UniPoly, mobius_product, product

ROUTES = ("partition", "series", "reconstruction")

# Mapping k -> F_k used to override the computed polynomials in checks.
FTable = Mapping[int, MultiPoly]


class InternalInconsistency(RuntimeError):
    """A generating-series computation produced a coefficient that must vanish."""


X1 = MultiPoly.var(1)


# ---- s_k and F_k ---------------------------------------------------------


@functools.lru_cache(maxsize=None)
def s_poly(k: int) -> MultiPoly:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    scale = Fraction(2 * (-1) ** (k - 1), math.factorial(k - 1))
    terms = {}
    for m in range(1, k + 1):
        c = bernoulli(m) * stirling_first(k, m)
        if c:
            terms[((m, 1),)] = scale * c
    return MultiPoly(terms)


@functools.lru_cache(maxsize=None)
def _neg_s_power(j: int, e: int) -> MultiPoly:
    if e == 0:
        return MultiPoly.constant(1)
    return _neg_s_power(j, e - 1) * (-s_poly(j))


def _partitions(k: int, largest: int):
    """Yield multiplicity dicts ``{j: lambda_j}`` with ``sum j*lambda_j == k``, parts <= largest."""
    if k == 0:
        yield {}
        return
    if largest == 0:
        return
    for lam in range(k // largest, -1, -1):
        for rest in _partitions(k - lam * largest, largest - 1):
            if lam:
                rest = dict(rest)
                rest[largest] = lam
            yield rest


@functools.lru_cache(maxsize=None)
def f_poly_partition(k: int) -> MultiPoly:
    """F_k from the weighted sum over partitions of ``k``."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    total = MultiPoly()
    for lam in _partitions(k, k):
        weight = Fraction(1)
        term = MultiPoly.constant(1)
        for j, e in lam.items():
            weight /= math.factorial(e) * j**e
            term = term * _neg_s_power(j, e)
        total = total + term.scale(weight)
    return total.scale(math.factorial(k))


def q_series(order: int) -> TruncSeries:
    """``Q(x, t) = -2 sum_n B_n/n! (-log(1+t))^n x_n`` truncated at ``t^order``."""
    minus_log = -TruncSeries.t(order).log1p()
    coeffs = [MultiPoly() for _ in range(order + 1)]
    power = TruncSeries.one(order)
    for n in range(1, order + 1):
        power = power * minus_log
        b = bernoulli(n)
        if not b:
            continue
        weight = -2 * b / math.factorial(n)
        xn = MultiPoly.var(n)
        for j in range(n, order + 1):
            if power[j]:
                coeffs[j] = coeffs[j] + xn.scale(weight * power[j])
    return TruncSeries(coeffs, order)


@functools.lru_cache(maxsize=None)
def f_polys_series(k_max: int) -> List[MultiPoly]:
    """``[F_0, ..., F_k_max]`` read off ``P = exp(-Q)``.

    Also confirms ``[t^j] Q == s_j / j`` on the way.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be positive, got {k_max}")
    q = q_series(k_max)
    for j in range(1, k_max + 1):
        if q[j] != s_poly(j).scale(Fraction(1, j)):
            raise InternalInconsistency(f"[t^{j}]Q = {q[j]} differs from s_{j}/{j}")
    p = (-q).exp()
    return [MultiPoly.constant(1) * p[k] * math.factorial(k) for k in range(k_max + 1)]


@functools.lru_cache(maxsize=None)
def omega_polys(m_max: int) -> List[MultiPoly]:
    """``[Omega_1, ..., Omega_m_max]`` from their exponential generating series in u."""
    if m_max < 1:
        raise ValueError(f"m_max must be positive, got {m_max}")
    order = 2 * m_max
    u_half = TruncSeries((0, Fraction(1, 2)), order)
    a = arcsinh_series(order).compose(u_half).scale(2)
    a2 = a * a
    exponent = TruncSeries.zero(order)
    power = TruncSeries.one(order)
    for nu in range(1, m_max + 1):
        power = power * a2
        weight = 2 * bernoulli(2 * nu) / math.factorial(2 * nu)
        exponent = exponent + power.scale(MultiPoly.var(2 * nu).scale(weight))
    r = exponent.exp()
    for i in range(1, order + 1, 2):
        if r[i] != 0:
            raise InternalInconsistency(f"odd coefficient u^{i} of the Omega series is {r[i]}")
    out = []
    for m in range(1, m_max + 1):
        factor = Fraction(math.factorial(2 * m)) / (2 * bernoulli(2 * m))
        out.append(MultiPoly.constant(0) + r[2 * m] * factor)
    return out


def omega_poly(m: int) -> MultiPoly:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return omega_polys(m)[m - 1]


@functools.lru_cache(maxsize=None)
def f_poly_reconstruct(k: int) -> MultiPoly:
    """F_k rebuilt from falling factorials in x1 and the Omega polynomials."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    total = falling_factorial(X1, k)
    if k == 0:
        return MultiPoly.constant(1)
    for m in range(1, k // 2 + 1):
        c = 2 * bernoulli(2 * m) * math.comb(k, 2 * m)
        total = total + (falling_factorial(X1 - m, k - 2 * m) * omega_poly(m)).scale(c)
    return total


def f_poly(k: int, route: str = "partition") -> MultiPoly:
    if route == "partition":
        return f_poly_partition(k)
    if route == "series":
        return f_polys_series(max(k, 1))[k]
    if route == "reconstruction":
        return f_poly_reconstruct(k)
    raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")


@dataclass(frozen=True)
class LehmerTable:
    k_max: int
    s_polys: Sequence[MultiPoly]
    f_polys: Sequence[MultiPoly]
    omega_polys: Sequence[MultiPoly]
    construction_route: str

    def s(self, j: int) -> MultiPoly:
        return self.s_polys[j - 1]

    def f(self, k: int) -> MultiPoly:
        return self.f_polys[k]

    def omega(self, m: int) -> MultiPoly:
        return self.omega_polys[m - 1]


def build_table(k_max: int, route: str = "partition") -> LehmerTable:
    if route == "series":
        fs = list(f_polys_series(k_max))
    else:
        fs = [f_poly(k, route) for k in range(k_max + 1)]
    return LehmerTable(
        k_max,
        tuple(s_poly(j) for j in range(1, k_max + 1)),
        tuple(fs),
        tuple(omega_polys(k_max // 2)) if k_max >= 2 else (),
        route,
    )


# ---- V_n, W_n and the specialised polynomials ------------------------------


@functools.lru_cache(maxsize=None)
def v_poly(n: int) -> UniPoly:
    """Integer polynomial with ``sinh(n t) = sinh(t) V_n(2 sinh t)`` (odd n) or ``sinh(2t) V_n(2 sinh t)`` (even n)."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    coeffs = {}
    if n % 2:
        for m in range((n - 1) // 2 + 1):
            c = n * math.factorial(n - m - 1) // (math.factorial(m) * math.factorial(n - 2 * m))
            coeffs[n - 2 * m - 1] = c
    else:
        for m in range(n // 2):
            coeffs[n - 2 * m - 2] = math.comb(n - m - 1, m)
    return UniPoly([coeffs.get(i, 0) for i in range(max(coeffs) + 1)])


@functools.lru_cache(maxsize=None)
def w_poly(n: int) -> UniPoly:
    """Primitive part of V_n: ``prod_{d | n} V_d ** mu(n/d)``."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return mobius_product(n, v_poly)


def _require_n3(n: int) -> None:
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")


@functools.lru_cache(maxsize=None)
def omega_value(m: int, n: int) -> Fraction:
    """``Omega_m`` at ``x_{2v} = J_{2v}(n) / (4v)``."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    _require_n3(n)
    return omega_poly(m).evaluate(totient_point(n, 2 * m))


def integrality_value(m: int, n: int) -> Fraction:
    """``2 B_{2m} / (2m)! * omega_m(n)``."""
    return 2 * bernoulli(2 * m) / math.factorial(2 * m) * omega_value(m, n)


def f_kn_poly(k: int, n: int, route: str = "explicit") -> UniPoly:
    """``F_k(x, J_2(n)/4, ..., J_k(n)/(2k))`` as a univariate polynomial.

    ``route="explicit"`` uses the falling-factorial expansion with omega_m(n);
    ``route="specialize"`` substitutes into the partition-route F_k.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    _require_n3(n)
    if route == "specialize":
        point = totient_point(n, k)
        del point[1]
        return f_poly_partition(k).substitute(point).to_unipoly(1)
    if route != "explicit":
        raise ValueError(f"unknown route {route!r}")
    x = UniPoly.x()
    total = falling_factorial(x, k)
    for m in range(1, k // 2 + 1):
        c = Fraction(math.factorial(k), math.factorial(k - 2 * m)) * integrality_value(m, n)
        total = total + falling_factorial(x - m, k - 2 * m) * c
    return total


# ---- single-instance checks ----------------------------------------------


def _table_f(k: int, table: Optional[FTable]) -> MultiPoly:
    if table is not None and k in table:
        return table[k]
    return f_poly_partition(k)


def check_lehmer_identity(n: int, k: int, table: Optional[FTable] = None) -> VerificationReport:
    """``Phi_n^{(k)}(1) / Phi_n(1) == F_k(phi(n)/2, J_2(n)/4, ..., J_k(n)/(2k))``."""
    if n < 2 or k < 0:
        raise ValueError(f"need n >= 2 and k >= 0, got n={n}, k={k}")
    lhs = deriv_ratio(n, k)
    f = _table_f(k, table)
    top = max([k] + f.variables())
    rhs = f.evaluate(totient_point(n, top))
    report = VerificationReport.single("lehmer-identity", (n, k), lhs, rhs, lhs == rhs)
    if lhs.denominator != 1:
        report.notes.append(f"non-integral ratio at n={n}, k={k}: {render_value(lhs)}")
    return report


def check_conjecture_divisibility(k: int, table: Optional[FTable] = None) -> VerificationReport:
    """``x1 - k`` divides ``F_{2k+1}``."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    _, rem = _table_f(2 * k + 1, table).divide_by_linear(k)
    return VerificationReport.single("conjecture-1", (k,), str(rem), "0", not rem)


def check_route_agreement(k: int, table: Optional[FTable] = None) -> VerificationReport:
    """All three constructions of F_k (and the supplied table, if any) coincide."""
    ref = f_poly_partition(k)
    others = [f_poly(k, "series"), f_poly_reconstruct(k)]
    if table is not None and k in table:
        others.append(table[k])
    for other in others:
        if other != ref:
            return VerificationReport.single("route-agreement", (k,), str(other), str(ref), False)
    return VerificationReport.single("route-agreement", (k,), "", "", True)


def check_integrality(n: int, m: int, k_max: Optional[int] = None) -> VerificationReport:
    """``2 B_{2m}/(2m)! omega_m(n)`` is an integer for ``1 <= m < phi(n)/2``.

    With ``k_max`` the report also covers integrality of ``F_{k,n}`` for
    ``1 <= k < phi(n)``, ``k <= k_max``.
    """
    _require_n3(n)
    phi = euler_phi(n)
    if m < 1 or 2 * m >= phi:
        value = integrality_value(m, n) if m >= 1 else None
        return VerificationReport.not_applicable(
            "integrality",
            (n, m),
            f"m={m} outside 1 <= m < phi({n})/2 = {Fraction(phi, 2)}; value {render_value(value)}",
        )
    value = integrality_value(m, n)
    report = VerificationReport.single("integrality", (n, m), value, "integer", value.denominator == 1)
    if k_max is None:
        return report
    parts = [report] + [check_fkn_integrality(n, k) for k in range(1, min(k_max, phi - 1) + 1)]
    return merge("integrality", f"n={n},m={m},k<={k_max}", parts)


def check_fkn_integrality(n: int, k: int) -> VerificationReport:
    """``F_{k,n}(x)`` has integer coefficients and both construction routes agree."""
    _require_n3(n)
    if not 1 <= k < euler_phi(n):
        return VerificationReport.not_applicable("fkn-integrality", (n, k), f"k={k} outside 1 <= k < phi({n})")
    explicit = f_kn_poly(k, n)
    special = f_kn_poly(k, n, route="specialize")
    if explicit != special:
        return VerificationReport.single("fkn-integrality", (n, k), str(explicit), str(special), False)
    return VerificationReport.single("fkn-integrality", (n, k), str(explicit), "integral", explicit.is_integral())


def _divides(d: int, value: Fraction) -> bool:
    return value.denominator == 1 and value.numerator % d == 0


def check_ak_congruence(n: int, k: int) -> VerificationReport:
    """Akiyama-Kaneko divisibility for the order ``2k+1`` derivative at 1.

    ``k == 1``: ``phi(n) - 2`` divides ``2 Phi_n'''(1) / Phi_n(1)``;
    ``k >= 2``: ``phi(n) - 2k`` divides ``Phi_n^{(2k+1)}(1) / Phi_n(1)``.
    The weaker statements on ``Phi_n^{(2k+1)}(1)`` itself are checked too.
    """
    _require_n3(n)
    phi = euler_phi(n)
    if k < 1 or not 2 * k + 1 < phi:
        return VerificationReport.not_applicable("ak-congruence", (n, k), f"need 3 <= 2k+1 < phi(n)={phi}")
    mod = phi - 2 * k
    ratio = deriv_ratio(n, 2 * k + 1)
    raw = Fraction(deriv_at_1(n, 2 * k + 1))
    if k == 1:
        ratio, raw = 2 * ratio, 2 * raw
    ok = _divides(mod, ratio) and _divides(mod, raw)
    return VerificationReport.single("ak-congruence", (n, k), ratio, f"multiple of {mod}", ok)


def w_mod_p_check(p: int, r: int) -> VerificationReport:
    """``W_{p^r} == x^{phi(p^r)} (mod p)``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r < 1 or p**r < 3:
        raise ValueError(f"need r >= 1 and p^r >= 3, got p={p}, r={r}")
    n = p**r
    reduced = w_poly(n).reduce_mod_p(p)
    expected = [0] * euler_phi(n) + [1]
    return VerificationReport.single("w-mod-p", (p, r), reduced, expected, reduced == expected)


def w_expansion_check(n: int, m_max: int) -> VerificationReport:
    """``W_n(x) / Phi_n(1) == 1 + 2 sum_m B_{2m}/(2m)! omega_m(n) x^{2m}`` for ``m <= m_max``.

    Coefficients beyond ``deg W_n`` must vanish on the right-hand side too.
    """
    _require_n3(n)
    w = w_poly(n)
    scaled = w * Fraction(1, phi_at_1(n))
    if not w.is_even():
        return VerificationReport.single("w-expansion", (n, -1), str(w), "even polynomial", False)
    if scaled[0] != 1:
        return VerificationReport.single("w-expansion", (n, 0), scaled[0], 1, False)
    for m in range(1, m_max + 1):
        lhs = scaled[2 * m]
        rhs = integrality_value(m, n)
        if lhs != rhs:
            return VerificationReport.single("w-expansion", (n, m), lhs, rhs, False)
    return VerificationReport.single("w-expansion", (n, m_max), "", "", True)


def check_w_factorization(n: int) -> VerificationReport:
    """``prod_{d | n} W_d == V_n``."""
    lhs = product([w_poly(d) for d in divisors(n)])
    rhs = v_poly(n)
    return VerificationReport.single("w-factorization", (n,), str(lhs), str(rhs), lhs == rhs)


def check_cyclotomic_product(n: int) -> VerificationReport:
    """``prod_{d | n} Phi_d == x^n - 1``."""
    lhs = product([cyclotomic_poly(d).poly for d in divisors(n)])
    rhs = UniPoly.monomial(n) - 1
    return VerificationReport.single("cyclotomic-product", (n,), str(lhs), str(rhs), lhs == rhs)


def golden_tables(k_max: int = 12, m_max: int = 8) -> Dict[str, Dict[int, MultiPoly]]:
    return {
        "s": {j: s_poly(j) for j in range(1, k_max + 1)},
        "F": {k: f_poly_partition(k) for k in range(k_max + 1)},
        "Omega": {m: omega_poly(m) for m in range(1, m_max + 1)},
    }


def clear_caches() -> None:
    """Drop every memo table in this module and in :mod:`cyclo.cyclotomic` (used for cold timings)."""
    from cyclo import cyclotomic

    for fn in (
        s_poly,
        _neg_s_power,
        f_poly_partition,
        f_polys_series,
        omega_polys,
        f_poly_reconstruct,
        v_poly,
        w_poly,
        omega_value,
        cyclotomic.cyclotomic_poly,
        cyclotomic._derivative_chain,
    ):
        fn.cache_clear()
