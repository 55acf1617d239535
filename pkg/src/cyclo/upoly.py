"""Dense univariate polynomials over the rationals."""

from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Sequence

from cyclo.ntkernel import divisors, mobius


class NonDivisible(ArithmeticError):
    """Raised by :meth:`UniPoly.exact_div` when the remainder is nonzero."""

    def __init__(self, dividend: "UniPoly", divisor: "UniPoly", remainder: "UniPoly"):
        super().__init__(f"{divisor} does not divide {dividend}: remainder {remainder}")
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder


def _trim(coeffs: List[Fraction]) -> List[Fraction]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_terms(terms: Iterable[tuple]) -> str:
    """Join ``(coefficient, monomial_text)`` pairs using the canonical grammar.

    An empty monomial text marks the constant term.
    """
    out = []
    for coeff, mono in terms:
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out) if out else "0"


class UniPoly:
    """Immutable polynomial in ``x`` with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros are trimmed so
    the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = tuple(_trim([Fraction(c) for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs: List[Fraction]) -> "UniPoly":
        p = object.__new__(cls)
        p.coeffs = tuple(_trim(coeffs))
        return p

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "UniPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append((c, mono))
        return render_terms(terms)

    @staticmethod
    def _coerce(other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.constant(other)
        return NotImplemented

    def __add__(self, other) -> "UniPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other) -> "UniPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        return (-self) + other

    def scale(self, c) -> "UniPoly":
        c = Fraction(c)
        return UniPoly._raw([c * a for a in self.coeffs])

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        # iterate only over nonzero entries: x^d - 1 style factors are very sparse
        nb = [(j, c) for j, c in enumerate(b) if c]
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in nb:
                    out[i + j] += ca * cb
        return UniPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = UniPoly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divmod(self, divisor: "UniPoly"):
        """Long division; returns ``(quotient, remainder)``."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = divisor.degree
        lead = divisor.coeffs[-1]
        low = [(j, c) for j, c in enumerate(divisor.coeffs[:-1]) if c]
        if len(rem) - 1 < db:
            return UniPoly(), self
        quot = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c if lead == 1 else c / lead
            quot[i - db] = q
            rem[i] = Fraction(0)
            shift = i - db
            for j, cd in low:
                rem[shift + j] -= q * cd
        return UniPoly._raw(quot), UniPoly._raw(rem[:db])

    def exact_div(self, divisor: "UniPoly") -> "UniPoly":
        """Quotient ``q`` with ``self == divisor * q``; raises :class:`NonDivisible` otherwise."""
        q, r = self.divmod(divisor)
        if r:
            raise NonDivisible(self, divisor, r)
        return q

    def derivative(self, k: int = 1) -> "UniPoly":
        if k < 0:
            raise ValueError(f"derivative order must be non-negative, got {k}")
        coeffs = list(self.coeffs)
        for _ in range(k):
            coeffs = [i * c for i, c in enumerate(coeffs)][1:]
        return UniPoly._raw(coeffs)

    def eval(self, a) -> Fraction:
        """Horner evaluation at an exact rational (or any ring element)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    __call__ = eval

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_monic(self) -> bool:
        return self.leading() == 1

    def is_even(self) -> bool:
        """True when only even powers of ``x`` occur."""
        return not any(self.coeffs[1::2])

    def reduce_mod_p(self, q: int) -> List[int]:
        """Integer coefficients reduced into ``[0, q)``, trailing zeros trimmed."""
        if not self.is_integral():
            raise ValueError(f"reduce_mod_p needs an integral polynomial, got {self}")
        out = [c.numerator % q for c in self.coeffs]
        while out and not out[-1]:
            out.pop()
        return out


def mobius_product(n: int, family: Callable[[int], UniPoly]) -> UniPoly:
    """``prod_{d | n} family(d) ** mobius(n // d)`` as an exact polynomial.

    All factors with exponent +1 are multiplied together, likewise those with
    exponent -1, and a single exact division finishes. Raises
    :class:`NonDivisible` when the family does not cancel.
    """
    num, den = UniPoly.constant(1), UniPoly.constant(1)
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            num = num * family(d)
        elif mu == -1:
            den = den * family(d)
    return num.exact_div(den)


def from_mapping(coeffs: Dict[int, object]) -> UniPoly:
    if not coeffs:
        return UniPoly()
    out = [Fraction(0)] * (max(coeffs) + 1)
    for i, c in coeffs.items():
        out[i] += Fraction(c)
    return UniPoly._raw(out)


def product(polys: Sequence[UniPoly]) -> UniPoly:
    result = UniPoly.constant(1)
    for p in polys:
        result = result * p
    return result
