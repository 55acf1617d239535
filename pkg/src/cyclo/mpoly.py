"""Sparse multivariate polynomials over the rationals in variables x1, x2, ...

A monomial is a tuple of ``(variable_index, exponent)`` pairs sorted by
variable index with every exponent positive; the empty tuple is the constant
monomial. Coefficients are :class:`fractions.Fraction` and never zero, so two
polynomials are equal exactly when their term dictionaries are equal.
"""

import math
import re
from fractions import Fraction
from typing import Dict, Mapping, Tuple, Union

from cyclo.upoly import UniPoly, format_rational, render_terms

Monomial = Tuple[Tuple[int, int], ...]
Scalar = Union[int, Fraction]


class UnassignedVariable(LookupError):
    """A scalar value was requested but some variable was left unassigned."""

    def __init__(self, index: int):
        super().__init__(f"variable x{index} has no assigned value")
        self.index = index


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_text(m: Monomial) -> str:
    return "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in m)


def _order_key(m: Monomial):
    # x_j carries weight j; ties go to the larger exponent on the highest variable
    weight = sum(v * e for v, e in m)
    return (weight, tuple(reversed(m)))


class MultiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] = None):
        clean: Dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(sorted((v, e) for v, e in mono if e))
            c = Fraction(c)
            if c:
                total = clean.get(mono, 0) + c
                if total:
                    clean[mono] = total
                else:
                    clean.pop(mono, None)
        self.terms = clean

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "MultiPoly":
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def var(cls, index: int) -> "MultiPoly":
        if index < 1:
            raise ValueError(f"variable indices start at 1, got {index}")
        return cls._raw({((index, 1),): Fraction(1)})

    @classmethod
    def constant(cls, c: Scalar) -> "MultiPoly":
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    # ---- basic queries -------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def variables(self):
        return sorted({v for mono in self.terms for v, _ in mono})

    def degree_in(self, index: int) -> int:
        return max((dict(m).get(index, 0) for m in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MultiPoly.constant(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _order_key(t[0]), reverse=True)

    def __str__(self) -> str:
        return render_terms((c, _mono_text(m)) for m, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def render_factored(self) -> str:
        """Content-extracted form such as ``(1/3)*(x2 + 3*x1^2 - 3*x1)``."""
        c = self.content()
        if c in (0, 1):
            return str(self)
        return f"({format_rational(c)})*({self.scale(1 / c)})"

    # ---- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other)
        return None

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def scale(self, c: Scalar) -> "MultiPoly":
        c = Fraction(c)
        if not c:
            return MultiPoly()
        return MultiPoly._raw({m: a * c for m, a in self.terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MultiPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> "MultiPoly":
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return self.scale(1 / Fraction(c))

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = MultiPoly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # ---- specialization and division ------------------------------------

    def substitute(self, assignment: Mapping[int, object]) -> "MultiPoly":
        """Replace the assigned variables; unassigned ones stay symbolic.

        Values may be rationals or MultiPoly instances.
        """
        out = MultiPoly()
        scalar_parts: Dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            rest = []
            factor = c
            poly_factor = None
            for v, e in mono:
                if v in assignment:
                    val = assignment[v]
                    if isinstance(val, MultiPoly):
                        poly_factor = val**e if poly_factor is None else poly_factor * val**e
                    else:
                        factor = factor * Fraction(val) ** e
                else:
                    rest.append((v, e))
            if poly_factor is None:
                key = tuple(rest)
                s = scalar_parts.get(key, 0) + factor
                if s:
                    scalar_parts[key] = s
                else:
                    scalar_parts.pop(key, None)
            else:
                out = out + poly_factor * MultiPoly({tuple(rest): factor})
        return out + MultiPoly._raw(scalar_parts)

    def evaluate(self, assignment: Mapping[int, Scalar]) -> Fraction:
        """Exact scalar value under a full assignment."""
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = c
            for v, e in mono:
                if v not in assignment:
                    raise UnassignedVariable(v)
                term *= Fraction(assignment[v]) ** e
            total += term
        return total

    def coefficients_in(self, index: int) -> Dict[int, "MultiPoly"]:
        """View as a polynomial in ``x_index``: exponent -> coefficient polynomial."""
        groups: Dict[int, Dict[Monomial, Fraction]] = {}
        for mono, c in self.terms.items():
            e = 0
            rest = []
            for v, ev in mono:
                if v == index:
                    e = ev
                else:
                    rest.append((v, ev))
            groups.setdefault(e, {})[tuple(rest)] = c
        return {e: MultiPoly._raw(t) for e, t in groups.items()}

    def divide_by_linear(self, c: Scalar, index: int = 1):
        """Synthetic division by ``x_index - c``.

        Returns ``(quotient, remainder)`` with ``self == (x - c) * quotient + remainder``
        and the remainder free of ``x_index``.
        """
        c = Fraction(c)
        coeffs = self.coefficients_in(index)
        if not coeffs:
            return MultiPoly(), MultiPoly()
        top = max(coeffs)
        x = MultiPoly.var(index)
        quotient = MultiPoly()
        carry = MultiPoly()
        for e in range(top, 0, -1):
            carry = coeffs.get(e, MultiPoly()) + carry * c
            quotient = quotient + carry * x ** (e - 1)
        remainder = coeffs.get(0, MultiPoly()) + carry * c
        return quotient, remainder

    def to_unipoly(self, index: int = 1) -> UniPoly:
        """Convert a polynomial in the single variable ``x_index``."""
        extra = [v for v in self.variables() if v != index]
        if extra:
            raise UnassignedVariable(extra[0])
        out: Dict[int, Fraction] = {}
        for mono, c in self.terms.items():
            out[dict(mono).get(index, 0)] = c
        if not out:
            return UniPoly()
        return UniPoly([out.get(i, 0) for i in range(max(out) + 1)])

    @classmethod
    def from_unipoly(cls, p: UniPoly, index: int = 1) -> "MultiPoly":
        return cls({((index, i),) if i else (): c for i, c in enumerate(p.coeffs)})


_TERM_RE = re.compile(r"^(?:(\d+(?:/\d+)?)(?:\*|$))?(.*)$")


def parse(text: str) -> MultiPoly:
    """Parse the canonical text produced by ``str`` or ``render_factored``."""
    text = text.strip()
    m = re.fullmatch(r"\((\d+(?:/\d+)?)\)\*\((.*)\)", text)
    if m:
        return parse(m.group(2)).scale(Fraction(m.group(1)))
    if text == "0":
        return MultiPoly()
    text = text.replace(" - ", " + -").replace(" + ", "\x00")
    out = MultiPoly()
    for chunk in text.split("\x00"):
        chunk = chunk.strip()
        sign = 1
        if chunk.startswith("-"):
            sign, chunk = -1, chunk[1:]
        coeff_text, mono_text = _TERM_RE.match(chunk).groups()
        coeff = Fraction(coeff_text) if coeff_text else Fraction(1)
        mono = []
        if mono_text:
            for factor in mono_text.split("*"):
                fm = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
                if not fm:
                    raise ValueError(f"cannot parse monomial factor {factor!r} in {text!r}")
                mono.append((int(fm.group(1)), int(fm.group(2) or 1)))
        out = out + MultiPoly({tuple(mono): sign * coeff})
    return out
