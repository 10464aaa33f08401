"""Words over the integer alphabet {0, ..., k-1} and their basic predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
DEFAULT_OUTPUT_WIDTH = 10


@dataclass(frozen=True, order=True)
class Word:
    """An immutable word; ordering is lexicographic on the symbols."""

    symbols: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.k < 1:
            raise ValueError(f"alphabet size must be >= 1, got {self.k}")
        for s in self.symbols:
            if not 0 <= s < self.k:
                raise ValueError(f"symbol {s} outside alphabet of size {self.k}")

    @classmethod
    def parse(cls, text: str, k: int, width: int = DEFAULT_OUTPUT_WIDTH) -> Word:
        """Inverse of :meth:`format`: digits (``"0101"``) or comma-separated ints (``"3,11,0"``)."""
        text = text.strip()
        if k > min(width, len(_DIGITS)) or "," in text:
            return cls(tuple(int(t) for t in text.split(",") if t), k)
        return cls(tuple(int(c, 36) for c in text), k)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.symbols[index], self.k)
        return self.symbols[index]

    def __add__(self, other: Word) -> Word:
        _check_alphabet(self, other)
        return Word(self.symbols + other.symbols, self.k)

    def __mul__(self, times: int) -> Word:
        return Word(self.symbols * times, self.k)

    def format(self, width: int = DEFAULT_OUTPUT_WIDTH) -> str:
        # Contiguous digits while k fits under the threshold; base 36 is the hard ceiling.
        if self.k <= min(width, len(_DIGITS)):
            return "".join(_DIGITS[s] for s in self.symbols)
        return ",".join(str(s) for s in self.symbols)

    def __str__(self) -> str:
        return self.format()


def word(symbols: str | Iterable[int], k: int = 2) -> Word:
    """Convenience constructor accepting either a digit string or an iterable of ints."""
    if isinstance(symbols, str):
        return Word.parse(symbols, k)
    return Word(tuple(symbols), k)


@dataclass(frozen=True)
class ShiftProfile:
    word_length: int
    distances: tuple[int, ...]

    def shifts_at(self, distance: int) -> list[int]:
        return [i for i, d in enumerate(self.distances) if d == distance]


def _check_alphabet(u: Word, v: Word) -> None:
    if u.k != v.k:
        raise ValueError(f"alphabet sizes differ: {u.k} != {v.k}")


def _distance(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def hamming(u: Word, v: Word) -> int:
    if len(u) != len(v):
        raise ValueError(f"unequal lengths: {len(u)} != {len(v)}")
    _check_alphabet(u, v)
    return _distance(u.symbols, v.symbols)


def rotate(w: Word, i: int) -> Word:
    """Left shift by ``i``: rotate(xy, |x|) == yx."""
    n = len(w)
    if n == 0:
        raise ValueError("cannot rotate the empty word")
    if not 0 <= i <= n:
        raise ValueError(f"shift {i} out of range 0..{n}")
    s = w.symbols
    return Word(s[i:] + s[:i], w.k)


def shift_profile(w: Word) -> ShiftProfile:
    n = len(w)
    if n == 0:
        raise ValueError("shift profile of the empty word is undefined")
    s = w.symbols
    return ShiftProfile(n, tuple(_distance(s, s[i:] + s[:i]) for i in range(n)))


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def primitive_root(w: Word) -> Word:
    """Shortest z with w == z^m."""
    n = len(w)
    if n == 0:
        raise ValueError("the empty word has no primitive root")
    s = w.symbols
    for d in _divisors(n):
        if s[:d] * (n // d) == s:
            return Word(s[:d], w.k)
    raise AssertionError("unreachable: d == n always matches")


def is_primitive(w: Word) -> bool:
    return len(primitive_root(w)) == len(w)


def is_lyndon(w: Word) -> bool:
    n = len(w)
    if n == 0:
        raise ValueError("Lyndon test needs a non-empty word")
    s = w.symbols
    return all(s < s[i:] + s[:i] for i in range(1, n))


def commutes(x: Word, y: Word) -> bool:
    if len(x) == 0 or len(y) == 0:
        raise ValueError("commutes() needs non-empty words")
    _check_alphabet(x, y)
    return x.symbols + y.symbols == y.symbols + x.symbols
