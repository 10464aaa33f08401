"""Brute-force scans over all ``k**n`` words.

These deliberately ignore every structural result and test membership straight
from the definition, so they can referee the closed forms and the constructive
enumerators.  Words are visited as base-k counters in fixed-size chunks; each
chunk is an independent partition and the per-chunk tallies are simply summed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .enumeration import check_budget
from .words import Word

CHUNK = 1 << 15


@dataclass
class Census:
    k: int
    n: int
    h: int = 0
    h_by_shift: dict[int, int] = field(default_factory=dict)
    h_new_by_shift: dict[int, int] = field(default_factory=dict)
    h_exactly_one: int = 0
    lyndon_in_h: int = 0


@dataclass
class ScanChunk:
    """All words with codes ``codes``; ``digits[r]`` spells word ``r`` most significant first."""

    k: int
    n: int
    codes: np.ndarray
    digits: np.ndarray
    distances: np.ndarray  # distances[r, i] = ham(w_r, rotate(w_r, i))
    rotations: np.ndarray  # rotations[r, i] = code of rotate(w_r, i)

    def words(self, mask: np.ndarray) -> list[Word]:
        return [Word(tuple(int(s) for s in row), self.k) for row in self.digits[mask]]


def scan(k: int, n: int, budget: int | None = None, chunk: int = CHUNK) -> Iterator[ScanChunk]:
    if k < 1 or n < 1:
        raise ValueError(f"oracle scan requires k >= 1 and n >= 1 (k={k}, n={n})")
    total = k**n
    check_budget(f"oracle scan (k={k}, n={n})", total, budget)
    weights = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (codes[:, None] // weights) % k
        distances = np.empty((len(codes), n), dtype=np.int64)
        for i in range(n):
            distances[:, i] = np.count_nonzero(digits != np.roll(digits, -i, axis=1), axis=1)
        rotations = np.empty_like(distances)
        for i in range(n):
            # rotate left by i: the low n-i digits move up, the top i digits wrap around.
            low = k ** (n - i)
            rotations[:, i] = (codes % low) * k**i + codes // low
        yield ScanChunk(k, n, codes, digits, distances, rotations)


def oracle_shift_members(k: int, n: int, i: int, budget: int | None = None) -> list[Word]:
    if not 0 <= i < n:
        raise ValueError(f"shift {i} out of range for n={n}")
    found: list[Word] = []
    for c in scan(k, n, budget):
        found.extend(c.words(c.distances[:, i] == 2))
    return found


def _distinct_targets(rotations: np.ndarray, hit: np.ndarray) -> np.ndarray:
    """Per row, the number of distinct rotation codes among the ``hit`` columns."""
    marked = np.where(hit, rotations, -1)
    marked.sort(axis=1)
    fresh = np.ones_like(marked, dtype=bool)
    fresh[:, 1:] = marked[:, 1:] != marked[:, :-1]
    return np.count_nonzero(fresh & (marked >= 0), axis=1)


def oracle_h_census(k: int, n: int, budget: int | None = None) -> Census:
    census = Census(k, n)
    census.h_by_shift = {i: 0 for i in range(1, n)}
    census.h_new_by_shift = {i: 0 for i in range(1, n // 2 + 1)}
    for c in scan(k, n, budget):
        at_two = c.distances == 2
        at_two[:, 0] = False
        member = at_two.any(axis=1)
        census.h += int(member.sum())
        for i in range(1, n):
            census.h_by_shift[i] += int(at_two[:, i].sum())
        for i in census.h_new_by_shift:
            earlier = at_two[:, 1:i].any(axis=1)
            census.h_new_by_shift[i] += int((at_two[:, i] & ~earlier).sum())
        census.h_exactly_one += int((_distinct_targets(c.rotations, at_two) == 1).sum())
        lyndon = (c.rotations[:, 1:] > c.codes[:, None]).all(axis=1)
        census.lyndon_in_h += int((member & lyndon).sum())
    return census


def oracle_members(k: int, n: int, budget: int | None = None) -> list[Word]:
    """All of ``H(n)`` by scanning."""
    found: list[Word] = []
    for c in scan(k, n, budget):
        at_two = c.distances[:, 1:] == 2
        found.extend(c.words(at_two.any(axis=1)))
    return found
