"""Closed-form counts of words with a conjugate at Hamming distance 2.

Everything here is exact integer arithmetic.  Notation in docstrings:
``H(n, i)`` is the set of length-n words ``w`` with ``ham(w, rotate(w, i)) == 2``
and ``H(n)`` is their union over ``1 <= i < n``.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _check_k(k: int) -> None:
    _require(isinstance(k, int) and k >= 1, f"k must be an integer >= 1, got {k!r}")


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def mobius(n: int) -> int:
    _require(n >= 1, "mobius requires n >= 1")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def count_primitive(k: int, n: int) -> int:
    """Number of primitive words of length ``n``, by Moebius inversion."""
    _check_k(k)
    _require(n >= 1, "count_primitive requires n >= 1")
    return sum(mobius(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0)


def count_powers(k: int, n: int) -> int:
    return k**n - count_primitive(k, n)


def h_shift(k: int, n: int, i: int) -> int:
    """``|H(n, i)|``; depends on ``i`` only through ``gcd(n, i)``."""
    _check_k(k)
    _require(n > i >= 1, f"h_shift requires n > i >= 1 (n={n}, i={i})")
    g = gcd(n, i)
    return _exact_div(k**g * (k - 1) * n * (n // g - 1), 2)


def h_pairs(k: int, m: int, n: int) -> int:
    """Pairs ``(x, y)`` with ``|x| = m``, ``|y| = n`` and ``ham(xy, yx) == 2``."""
    _require(m >= 1 and n >= 1, f"h_pairs requires m, n >= 1 (m={m}, n={n})")
    return h_shift(k, n + m, m)


def h_overlap(k: int, n: int, i: int) -> int:
    """Words of ``H(n, i)`` that also lie in some ``H(n, j)`` with ``j < i``."""
    _check_k(k)
    _require(i >= 1, f"h_overlap requires i >= 1 (i={i})")
    _require(n >= 2 * i, f"h_overlap requires n >= 2i (n={n}, i={i})")
    if n % i == 0:
        return n * (k - 1) * count_powers(k, i)
    return n * (k - 1) * k ** gcd(n, i)


def h_new(k: int, n: int, i: int) -> int:
    """Words of ``H(n, i)`` lying in no ``H(n, j)`` with ``j < i``.

    Restricted to ``i <= n // 2``, the range where the overlap count is known.
    """
    _check_k(k)
    _require(1 <= i <= n // 2, f"h_new requires 1 <= i <= n/2 (n={n}, i={i})")
    g = gcd(n, i)
    if n % i == 0:
        return _exact_div(n * (k - 1) * (k**g * (n // g - 1) - 2 * count_powers(k, i)), 2)
    return _exact_div(k**g * (k - 1) * n * (n // g - 3), 2)


def h_total(k: int, n: int) -> int:
    """``|H(n)|``: every member is counted at its smallest shift ``i <= n // 2``."""
    _check_k(k)
    _require(n >= 2, f"h_total requires n >= 2 (n={n})")
    return sum(h_new(k, n, i) for i in range(1, n // 2 + 1))


def h_exactly_one(k: int, n: int) -> int:
    """Words with exactly one conjugate at Hamming distance 2 (none for odd ``n``)."""
    _check_k(k)
    _require(n >= 1, f"h_exactly_one requires n >= 1 (n={n})")
    if n % 2:
        return 0
    m = n // 2
    return _exact_div(n * (k - 1) * (k**m - 2 * count_powers(k, m)), 2)


def count_lyndon_in_h(k: int, n: int) -> int:
    return _exact_div(h_total(k, n), n)


def h_prime_closed_form(k: int, n: int) -> int:
    """Polynomial form of ``h(n)`` for prime ``n``.

    The derivation sums over ``2 <= i <= (n-1)/2`` and so only holds for odd
    primes; at ``n = 2`` it gives ``3k(k-1)/2`` while ``h(2) = k(k-1)``.
    """
    _check_k(k)
    _require(is_prime(n), f"h_prime_closed_form requires prime n (n={n})")
    return _exact_div(k * (k - 1) * n * (n * n - 4 * n + 7), 4)


def even_lower_bound(k: int, n: int) -> int:
    """Lower bound on ``h(2n)``; rounded up when ``n * k**n`` is odd."""
    _require(isinstance(k, int) and k >= 2, f"even_lower_bound requires k >= 2 (k={k})")
    _require(n > 1, f"even_lower_bound requires n > 1 (n={n})")
    return -(-(n * k**n) // 2)
