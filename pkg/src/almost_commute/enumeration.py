"""Constructive enumeration of the sets counted in :mod:`almost_commute.counting`.

Nothing here scans all ``k**n`` words; members are built from their block
structure.  The brute-force cross-check lives in :mod:`almost_commute.oracle`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .words import Word, hamming

DEFAULT_BUDGET = 2**22


class BudgetExceededError(RuntimeError):
    def __init__(self, what: str, needed: int, cap: int):
        super().__init__(f"{what} needs {needed} words, over the cap of {cap}")
        self.needed = needed
        self.cap = cap


def check_budget(what: str, needed: int, budget: int | None) -> None:
    cap = DEFAULT_BUDGET if budget is None else budget
    if needed > cap:
        raise BudgetExceededError(what, needed, cap)


def _one_symbol_changes(a: tuple[int, ...], k: int) -> Iterator[tuple[int, ...]]:
    for pos, s in enumerate(a):
        for t in range(k):
            if t != s:
                yield a[:pos] + (t,) + a[pos + 1 :]


@dataclass(frozen=True)
class BlockCharacterization:
    """A member of ``H(n, i)`` described by two blocks of length ``gcd(n, i)``.

    Walking the block cycle ``j1, j1 + step, ...`` (step ``i/g`` mod ``n/g``),
    the blocks strictly after ``j1`` up to and including ``j2`` hold ``b``;
    the remaining ones, ``j1`` among them, hold ``a``.
    """

    n: int
    i: int
    j1: int
    j2: int
    a: Word
    b: Word

    def __post_init__(self) -> None:
        g = gcd(self.n, self.i)
        if not 0 <= self.j1 < self.j2 < self.n // g:
            raise ValueError(f"need 0 <= j1 < j2 < {self.n // g} (j1={self.j1}, j2={self.j2})")
        if len(self.a) != g or len(self.b) != g or hamming(self.a, self.b) != 1:
            raise ValueError("blocks must have length gcd(n, i) and differ in exactly one symbol")

    def realize(self) -> Word:
        g = gcd(self.n, self.i)
        blocks_n, step = self.n // g, self.i // g
        blocks = [self.a.symbols] * blocks_n
        t = (self.j1 + step) % blocks_n
        while True:
            blocks[t] = self.b.symbols
            if t == self.j2:
                break
            t = (t + step) % blocks_n
        return Word(tuple(itertools.chain.from_iterable(blocks)), self.a.k)


@dataclass(frozen=True)
class OneErrorPowerForm:
    """The word ``u^p v u^(n/g - p - 1)`` where ``v`` differs from ``u`` in one place."""

    u: Word
    v: Word
    p: int
    n: int

    def __post_init__(self) -> None:
        g = len(self.u)
        if g == 0 or self.n % g or not 0 <= self.p < self.n // g:
            raise ValueError(f"bad power form: |u|={g}, n={self.n}, p={self.p}")
        if hamming(self.u, self.v) != 1:
            raise ValueError("v must differ from u in exactly one symbol")

    def realize(self) -> Word:
        g = len(self.u)
        return self.u * self.p + self.v + self.u * (self.n // g - self.p - 1)


def block_characterizations(k: int, n: int, i: int) -> Iterator[BlockCharacterization]:
    if not n > i >= 1:
        raise ValueError(f"enumerate_h_shift requires n > i >= 1 (n={n}, i={i})")
    g = gcd(n, i)
    blocks_n = n // g
    for a in itertools.product(range(k), repeat=g):
        for b in _one_symbol_changes(a, k):
            for j1, j2 in itertools.combinations(range(blocks_n), 2):
                yield BlockCharacterization(n, i, j1, j2, Word(a, k), Word(b, k))


def enumerate_h_shift(k: int, n: int, i: int, budget: int | None = None) -> list[Word]:
    """All of ``H(n, i)`` in lexicographic order."""
    if not n > i >= 1:
        raise ValueError(f"enumerate_h_shift requires n > i >= 1 (n={n}, i={i})")
    g = gcd(n, i)
    check_budget(f"enumerate_h_shift(k={k}, n={n}, i={i})", k**g * (n // g) ** 2, budget)
    return sorted(bc.realize() for bc in block_characterizations(k, n, i))


def one_error_power_forms(k: int, n: int, i: int, j: int) -> Iterator[OneErrorPowerForm]:
    if not (n >= 2 * i and i > j >= 1):
        raise ValueError(f"enumerate_intersection requires n >= 2i > 2j >= 2 (n={n}, i={i}, j={j})")
    g = gcd(gcd(n, i), j)
    for u in itertools.product(range(k), repeat=g):
        for v in _one_symbol_changes(u, k):
            for p in range(n // g):
                yield OneErrorPowerForm(Word(u, k), Word(v, k), p, n)


def enumerate_intersection(k: int, n: int, i: int, j: int, budget: int | None = None) -> list[Word]:
    """``H(n, i) & H(n, j)`` for ``n >= 2i > 2j``, in lexicographic order."""
    if not (n >= 2 * i and i > j >= 1):
        raise ValueError(f"enumerate_intersection requires n >= 2i > 2j >= 2 (n={n}, i={i}, j={j})")
    g = gcd(gcd(n, i), j)
    check_budget(f"enumerate_intersection(k={k}, n={n}, i={i}, j={j})", k**g * n * (k - 1), budget)
    return sorted(f.realize() for f in one_error_power_forms(k, n, i, j))


def _h_budget(k: int, n: int) -> int:
    return sum(k ** gcd(n, i) * (n // gcd(n, i)) ** 2 for i in range(1, n // 2 + 1))


def enumerate_h(k: int, n: int, budget: int | None = None) -> list[Word]:
    """All of ``H(n)``; shifts above ``n // 2`` add nothing by symmetry."""
    if n < 2:
        raise ValueError(f"enumerate_h requires n >= 2 (n={n})")
    check_budget(f"enumerate_h(k={k}, n={n})", _h_budget(k, n), budget)
    members: set[Word] = set()
    for i in range(1, n // 2 + 1):
        members.update(bc.realize() for bc in block_characterizations(k, n, i))
    return sorted(members)


def enumerate_exactly_one(k: int, n: int, budget: int | None = None) -> list[Word]:
    """Words with exactly one conjugate at distance 2: ``H(n, n/2)`` minus its overlaps."""
    if n < 2:
        raise ValueError(f"enumerate_exactly_one requires n >= 2 (n={n})")
    if n % 2:
        return []
    half = n // 2
    shared: set[Word] = set()
    for j in range(1, half):
        shared.update(enumerate_intersection(k, n, half, j, budget))
    return [w for w in enumerate_h_shift(k, n, half, budget) if w not in shared]
