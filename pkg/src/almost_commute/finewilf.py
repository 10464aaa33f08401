"""Extremal Fine-Wilf pairs: ``xy`` and ``yx`` agree on exactly ``|x|+|y|-gcd(|x|,|y|)-1`` symbols."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .enumeration import check_budget
from .words import Word


@dataclass(frozen=True)
class PairAgreement:
    x: Word
    y: Word
    agreement: int
    threshold: int

    @property
    def is_fine_wilf_pair(self) -> bool:
        return self.agreement == self.threshold


def agreement_prefix_length(u: Word, v: Word) -> int:
    if len(u) != len(v):
        raise ValueError(f"unequal lengths: {len(u)} != {len(v)}")
    for pos, (a, b) in enumerate(zip(u, v)):
        if a != b:
            return pos
    return len(u)


def fine_wilf_threshold(m: int, n: int) -> int:
    return m + n - gcd(m, n) - 1


def pair_agreement(x: Word, y: Word) -> PairAgreement:
    if len(x) == 0 or len(y) == 0:
        raise ValueError("Fine-Wilf pairs need non-empty words")
    return PairAgreement(x, y, agreement_prefix_length(x + y, y + x), fine_wilf_threshold(len(x), len(y)))


def is_fine_wilf_pair(x: Word, y: Word) -> bool:
    return pair_agreement(x, y).is_fine_wilf_pair


def search_fine_wilf_pairs(k: int, m: int, n: int, budget: int | None = None) -> list[tuple[Word, Word]]:
    """Every Fine-Wilf pair with ``|x| = m`` and ``|y| = n``, ordered by ``(x, y)``."""
    if m < 1 or n < 1:
        raise ValueError(f"search_fine_wilf_pairs requires m, n >= 1 (m={m}, n={n})")
    check_budget(f"search_fine_wilf_pairs(k={k}, m={m}, n={n})", k ** (m + n), budget)
    threshold = fine_wilf_threshold(m, n)
    found = []
    for xy in itertools.product(range(k), repeat=m + n):
        yx = xy[m:] + xy[:m]
        # agreement == threshold: equal up to it, mismatch right at it
        if xy[:threshold] == yx[:threshold] and xy[threshold] != yx[threshold]:
            found.append((Word(xy[:m], k), Word(xy[m:], k)))
    return found
