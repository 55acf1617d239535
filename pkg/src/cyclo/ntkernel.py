"""Integer and rational number theory used throughout the package.

Rationals are plain :class:`fractions.Fraction` values; every function here is
pure and either returns an ``int`` or a ``Fraction``.
"""

import functools
import math
import threading
from fractions import Fraction
from typing import List, Tuple

Factorization = List[Tuple[int, int]]


def _check_positive(name: str, value: int) -> None:
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value}")


@functools.lru_cache(maxsize=None)
def _factorize(n: int) -> Tuple[Tuple[int, int], ...]:
    pairs = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            pairs.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        pairs.append((n, 1))
    return tuple(pairs)


def factorize(n: int) -> Factorization:
    """Prime factorization of ``n`` by trial division, primes increasing.

    >>> factorize(12)
    [(2, 2), (3, 1)]
    >>> factorize(1)
    []
    """
    _check_positive("n", n)
    return list(_factorize(n))


def is_prime(n: int) -> bool:
    return n >= 2 and _factorize(n) == ((n, 1),)


def divisors(n: int) -> List[int]:
    """All positive divisors of ``n`` in increasing order."""
    _check_positive("n", n)
    divs = [1]
    for p, e in _factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    _check_positive("n", n)
    pairs = _factorize(n)
    if any(e > 1 for _, e in pairs):
        return 0
    return -1 if len(pairs) % 2 else 1


def jordan_totient(k: int, n: int) -> int:
    """Jordan's totient ``J_k(n)`` via the product over prime divisors.

    ``J_1`` is Euler's phi.
    """
    _check_positive("k", k)
    _check_positive("n", n)
    result = 1
    for p, e in _factorize(n):
        result *= p ** (e * k) - p ** ((e - 1) * k)
    return result


def jordan_totient_divisor_sum(k: int, n: int) -> int:
    """``J_k(n)`` as the Möbius-weighted divisor sum of ``d**k``."""
    _check_positive("k", k)
    _check_positive("n", n)
    return sum(mobius(n // d) * d**k for d in divisors(n))


def euler_phi(n: int) -> int:
    return jordan_totient(1, n)


_bernoulli_table: List[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(m: int) -> Fraction:
    """Bernoulli number ``B_m`` with the ``B_1 = -1/2`` convention.

    Uses sum_{j<=m} C(m+1, j) B_j = 0, memoized.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if m < len(_bernoulli_table):
        return _bernoulli_table[m]
    with _bernoulli_lock:
        table = _bernoulli_table
        while len(table) <= m:
            i = len(table)
            if i > 1 and i % 2:
                table.append(Fraction(0))
                continue
            acc = sum(math.comb(i + 1, j) * table[j] for j in range(i))
            table.append(-acc / (i + 1))
        return table[m]


@functools.lru_cache(maxsize=None)
def stirling_first(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind (cycle count form)."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k > n or k == 0:
        return 0
    return (n - 1) * stirling_first(n - 1, k) + stirling_first(n - 1, k - 1)


def falling_factorial(x, k: int):
    """``x (x-1) ... (x-k+1)`` for any ring element ``x`` supporting ``- int``."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    result = 1
    for i in range(k):
        result = (x - i) * result
    return result


def binomial(n, k: int):
    """Generalized binomial coefficient ``(n)_k / k!``.

    ``n`` may be any integer (including negative) or a Fraction; an integer
    ``n`` gives an ``int`` result.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    num = falling_factorial(n, k)
    if isinstance(n, int):
        return num // math.factorial(k)
    return Fraction(num) / math.factorial(k)
