"""Finite words over a small alphabet {0, ..., n-1}.

Words are plain tuples of ints. The empty tuple is the empty word.
"""
from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Sequence, Tuple

Word = Tuple[int, ...]

EMPTY: Word = ()

MAX_ALPHABET = 16
_DIGITS = "0123456789ABCDEF"


class Alphabet(int):
    """Alphabet size n; letters are 0..n-1."""

    def __new__(cls, n: int):
        if not 2 <= n <= MAX_ALPHABET:
            raise ValueError(f"alphabet size must be in 2..{MAX_ALPHABET}, got {n}")
        return super().__new__(cls, n)

    def words(self, length: int) -> Iterator[Word]:
        return product(range(self), repeat=length)

    def words_upto(self, length: int) -> Iterator[Word]:
        for k in range(length + 1):
            yield from self.words(k)


def parse_word(text: str) -> Word:
    """Parse a digit string such as ``0100``; ``e`` is the empty word.

    Letters 10..15 are written ``A``..``F``.
    """
    text = text.strip()
    if text in ("e", ""):
        return EMPTY
    try:
        return tuple(_DIGITS.index(ch) for ch in text)
    except ValueError:
        raise ValueError(f"malformed word literal {text!r}") from None


def format_word(w: Sequence[int]) -> str:
    if not w:
        return "e"
    return "".join(_DIGITS[a] for a in w)


def check_word(w: Sequence[int], n: int) -> Word:
    w = tuple(w)
    for a in w:
        if not 0 <= a < n:
            raise ValueError(f"letter {a} outside alphabet of size {n}")
    return w


def shortlex_key(w: Word):
    return (len(w), w)


def is_prefix(s: Word, t: Word) -> bool:
    """Non-strict prefix: s is an initial segment of t (s == t allowed)."""
    return len(s) <= len(t) and t[: len(s)] == s


def is_strict_prefix(s: Word, t: Word) -> bool:
    return len(s) < len(t) and t[: len(s)] == s


def compatible(s: Word, t: Word) -> bool:
    return is_prefix(s, t) or is_prefix(t, s)


def incompatible(s: Word, t: Word) -> bool:
    return not compatible(s, t)


def meet(s: Word, t: Word) -> Word:
    """Longest common prefix."""
    k = 0
    for a, b in zip(s, t):
        if a != b:
            break
        k += 1
    return s[:k]


def power(w: Word, k: int) -> Word:
    return w * k


def primitive_root(w: Word) -> Word:
    """Shortest u with w = u^k for some k >= 1."""
    if not w:
        raise ValueError("the empty word has no primitive root")
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    raise AssertionError("unreachable")


def is_primitive(w: Word) -> bool:
    return primitive_root(w) == w


def is_power_of(w: Word, u: Word) -> bool:
    """True iff w = u^k for some k >= 0."""
    if not u:
        return not w
    return len(w) % len(u) == 0 and u * (len(w) // len(u)) == w


def commutes(x: Word, y: Word) -> bool:
    return x + y == y + x


def split_point(s1: Word, s2: Word) -> Word:
    """meet(s1 s2, s2 s1): where the two products first disagree."""
    return meet(s1 + s2, s2 + s1)


def concat(words: Iterable[Word]) -> Word:
    out: list[int] = []
    for w in words:
        out.extend(w)
    return tuple(out)


def pi_chunk(alpha, beta: Sequence[int], q: int) -> Word:
    """The q-th chunk of ``alpha`` cut by ``beta``.

    Chunk 0 covers positions 0..beta[0] (length beta[0] + 1); chunk q > 0
    covers the next beta[q] positions. ``alpha`` is anything with
    ``prefix(k)`` (a Lasso or an OmegaStream).
    """
    if not 0 <= q < len(beta):
        raise IndexError(f"chunk {q} out of range for cut sequence of length {len(beta)}")
    if beta[0] < 0 or any(b <= 0 for b in beta[1 : q + 1]):
        raise ValueError("cut lengths after the first must be positive")
    start = 0 if q == 0 else 1 + sum(beta[:q])
    stop = sum(beta[: q + 1]) + 1
    return tuple(alpha.prefix(stop)[start:stop])
