"""Truncated formal power series in ``t`` with exact coefficients.

Coefficients may be anything that behaves like a commutative ring element
under ``+``, ``-``, ``*`` and ``==`` and that can be scaled by a
:class:`~fractions.Fraction`. Both ``Fraction`` and
:class:`~cyclo.mpoly.MultiPoly` qualify, and they may be mixed freely since
MultiPoly accepts scalars on either side.
"""

from fractions import Fraction
from typing import Iterable, List

from cyclo.ntkernel import binomial


class OrderMismatch(ValueError):
    pass


class NonzeroConstantTerm(ValueError):
    pass


def _is_zero(c) -> bool:
    return c == 0


class TruncSeries:
    """Series ``c_0 + c_1 t + ... + c_N t^N`` with everything beyond ``t^N`` dropped."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        cs: List = list(coeffs)[: order + 1]
        cs.extend(Fraction(0) for _ in range(order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(Fraction(c) if isinstance(c, int) else c for c in cs)

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls((1,), order)

    @classmethod
    def t(cls, order: int) -> "TruncSeries":
        """The generator ``t`` itself."""
        return cls((0, 1), order)

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i <= self.order else Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncSeries({list(self.coeffs)!r}, order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs, min(order, self.order))

    def _check(self, other: "TruncSeries") -> None:
        if not isinstance(other, TruncSeries):
            raise TypeError(f"expected TruncSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def _require_zero_constant(self, what: str) -> None:
        if not _is_zero(self.coeffs[0]):
            raise NonzeroConstantTerm(f"{what} needs a series without constant term")

    # ---- ring operations -------------------------------------------------

    def __add__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return TruncSeries((self.coeffs[0] + other,) + self.coeffs[1:], self.order)
        self._check(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other) -> "TruncSeries":
        return self + (-other)

    def __rsub__(self, other) -> "TruncSeries":
        return (-self) + other

    def scale(self, c) -> "TruncSeries":
        return TruncSeries([a * c for a in self.coeffs], self.order)

    def __mul__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        self._check(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        nz_a = [(i, c) for i, c in enumerate(a) if not _is_zero(c)]
        nz_b = [(j, c) for j, c in enumerate(b) if not _is_zero(c)]
        out: List = [Fraction(0)] * (n + 1)
        for i, ca in nz_a:
            for j, cb in nz_b:
                if i + j > n:
                    break
                out[i + j] = out[i + j] + ca * cb
        return TruncSeries(out, n)

    def __rmul__(self, other) -> "TruncSeries":
        return self.scale(other)

    def __pow__(self, e: int) -> "TruncSeries":
        if e < 0:
            raise ValueError("negative powers are not supported")
        result, base = TruncSeries.one(self.order), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def derivative(self) -> "TruncSeries":
        """Formal derivative, kept at the same order (top coefficient becomes zero)."""
        return TruncSeries([c * i for i, c in enumerate(self.coeffs)][1:], self.order)

    def integral(self) -> "TruncSeries":
        """Antiderivative with zero constant term."""
        return TruncSeries(
            [Fraction(0)] + [c * Fraction(1, i + 1) for i, c in enumerate(self.coeffs[:-1])],
            self.order,
        )

    # ---- transcendental operations -------------------------------------

    def exp(self) -> "TruncSeries":
        """``exp(f)`` for ``f(0) = 0`` via ``n g_n = sum_{k=1}^n k f_k g_{n-k}``."""
        self._require_zero_constant("exp")
        f = self.coeffs
        nz = [(k, k * c) for k, c in enumerate(f) if k and not _is_zero(c)]
        g: List = [Fraction(1)]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for k, kf in nz:
                if k > n:
                    break
                acc = acc + kf * g[n - k]
            g.append(acc * Fraction(1, n))
        return TruncSeries(g, self.order)

    def log1p(self) -> "TruncSeries":
        """``log(1 + f)`` for ``f(0) = 0`` via ``(1 + f) h' = f'``."""
        self._require_zero_constant("log1p")
        f = self.coeffs
        h: List = [Fraction(0)]
        for n in range(1, self.order + 1):
            acc = f[n] * n
            for k in range(1, n):
                if not _is_zero(f[n - k]):
                    acc = acc - h[k] * k * f[n - k]
            h.append(acc * Fraction(1, n))
        return TruncSeries(h, self.order)

    def compose(self, g: "TruncSeries") -> "TruncSeries":
        """``self(g(t))`` by Horner's rule; ``g`` must have zero constant term."""
        self._check(g)
        g._require_zero_constant("compose")
        acc = TruncSeries.zero(self.order)
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def binomial_pow(self, alpha) -> "TruncSeries":
        """``(1 + f) ** alpha`` for rational ``alpha`` and ``f(0) = 0``."""
        self._require_zero_constant("binomial_pow")
        alpha = Fraction(alpha)
        kernel = TruncSeries([binomial(alpha, n) for n in range(self.order + 1)], self.order)
        return kernel.compose(self)


def exp_series(f: TruncSeries) -> TruncSeries:
    return f.exp()


def log1p_series(f: TruncSeries) -> TruncSeries:
    return f.log1p()


def compose(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    return f.compose(g)


def binomial_pow_series(alpha, f: TruncSeries) -> TruncSeries:
    return f.binomial_pow(alpha)


def exp_t(order: int) -> TruncSeries:
    """``exp(t)``."""
    return TruncSeries.t(order).exp()


def sinh_series(order: int) -> TruncSeries:
    coeffs = []
    fact = Fraction(1)
    for n in range(order + 1):
        if n:
            fact /= n
        coeffs.append(fact if n % 2 else Fraction(0))
    return TruncSeries(coeffs, order)


def arcsinh_series(order: int) -> TruncSeries:
    """Taylor series of ``asinh(z)``, integrating ``(1 + z^2)^(-1/2)`` term by term."""
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    coeffs = [Fraction(0)] * (order + 1)
    half = Fraction(-1, 2)
    for j in range((order - 1) // 2 + 1):
        coeffs[2 * j + 1] = binomial(half, j) / (2 * j + 1)
    return TruncSeries(coeffs, order)
