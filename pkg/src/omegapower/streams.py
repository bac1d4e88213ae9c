"""Computable infinite words: ultimately periodic lassos and generated streams."""
from __future__ import annotations

import re
from bisect import bisect_left
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from .words import EMPTY, Word, format_word, parse_word, primitive_root


@dataclass(frozen=True)
class Lasso:
    """The infinite word head . cycle^oo, always held in canonical form.

    Build through :func:`lasso_normalize` (or :meth:`Lasso.of`); the
    canonical form makes structural equality coincide with equality of the
    denoted infinite words.
    """

    head: Word
    cycle: Word

    @classmethod
    def of(cls, head, cycle) -> "Lasso":
        return lasso_normalize(tuple(head), tuple(cycle))

    @classmethod
    def parse(cls, text: str) -> "Lasso":
        """Parse ``u(v)``, e.g. ``0(10)`` or ``(1)``."""
        m = re.fullmatch(r"\s*([0-9A-Fe]*)\s*\(\s*([0-9A-F]+)\s*\)\s*", text)
        if not m:
            raise ValueError(f"malformed lasso literal {text!r}")
        return lasso_normalize(parse_word(m.group(1)), parse_word(m.group(2)))

    def __str__(self) -> str:
        head = format_word(self.head) if self.head else ""
        return f"{head}({format_word(self.cycle)})"

    @property
    def num_classes(self) -> int:
        return len(self.head) + len(self.cycle)

    def letter(self, k: int) -> int:
        if k < len(self.head):
            return self.head[k]
        return self.cycle[(k - len(self.head)) % len(self.cycle)]

    def prefix(self, k: int) -> Word:
        return tuple(self.letter(i) for i in range(k))

    def position_class(self, k: int) -> int:
        """Index in 0..num_classes-1 of the suffix starting at position k."""
        h = len(self.head)
        if k < h:
            return k
        return h + (k - h) % len(self.cycle)

    def next_class(self, c: int) -> int:
        c += 1
        return c if c < self.num_classes else len(self.head)

    def shift(self, k: int) -> "Lasso":
        return lasso_shift(self, k)

    def letters(self) -> Iterator[int]:
        yield from self.head
        while True:
            yield from self.cycle


def lasso_normalize(u: Word, v: Word) -> Lasso:
    """Canonical representation of u . v^oo.

    The cycle is reduced to its primitive root, then the head is shortened
    while its last letter equals the last letter of the cycle (rotating the
    cycle each time).
    """
    if not v:
        raise ValueError("lasso cycle must be nonempty")
    u, v = tuple(u), primitive_root(tuple(v))
    while u and u[-1] == v[-1]:
        u = u[:-1]
        v = (v[-1],) + v[:-1]
    return Lasso(u, v)


def lasso_shift(alpha: Lasso, k: int) -> Lasso:
    """The suffix of alpha starting at position k."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    h = len(alpha.head)
    if k <= h:
        return lasso_normalize(alpha.head[k:], alpha.cycle)
    r = (k - h) % len(alpha.cycle)
    return lasso_normalize(EMPTY, alpha.cycle[r:] + alpha.cycle[:r])


def lassos_upto(n: int, max_head: int, max_cycle: int) -> list[Lasso]:
    """All distinct canonical lassos with |head| <= max_head, |cycle| <= max_cycle.

    Sorted by (|head| + |cycle|, head, cycle) for deterministic iteration.
    """
    seen = set()
    for hl in range(max_head + 1):
        for cl in range(1, max_cycle + 1):
            for u in product(range(n), repeat=hl):
                for v in product(range(n), repeat=cl):
                    seen.add(lasso_normalize(u, v))
    return sorted(seen, key=lambda a: (a.num_classes, a.head, a.cycle))


def lassos_total(n: int, total: int) -> list[Lasso]:
    """All distinct canonical lassos with |head| + |cycle| <= total, same order as above."""
    seen = set()
    for size in range(1, total + 1):
        for cl in range(1, size + 1):
            for u in product(range(n), repeat=size - cl):
                for v in product(range(n), repeat=cl):
                    seen.add(lasso_normalize(u, v))
    return sorted(seen, key=lambda a: (a.num_classes, a.head, a.cycle))


class OmegaStream:
    """An infinite word given by a total letter function.

    Callers always pass explicit prefix budgets; nothing here iterates
    without a bound.
    """

    def __init__(self, letter: Callable[[int], int], name: str = "stream"):
        self._letter = letter
        self.name = name

    def letter(self, k: int) -> int:
        return self._letter(k)

    def prefix(self, k: int) -> Word:
        return tuple(self._letter(i) for i in range(k))

    def __repr__(self) -> str:
        return f"OmegaStream({self.name})"

    @classmethod
    def from_lasso(cls, alpha: Lasso) -> "OmegaStream":
        return cls(alpha.letter, name=str(alpha))


class _RunLengthWord:
    """Letters of 1 0 1 0^2 1 0^3 ... : a 1 followed by a run of m zeros, m = 1, 2, ..."""

    def __init__(self):
        self._ones = [0]  # positions of the 1s, extended on demand

    def _extend_to(self, k: int) -> None:
        while self._ones[-1] <= k:
            m = len(self._ones)
            self._ones.append(self._ones[-1] + m + 1)

    def __call__(self, k: int) -> int:
        if k < 0:
            raise IndexError(k)
        self._extend_to(k)
        i = bisect_left(self._ones, k)
        return 1 if i < len(self._ones) and self._ones[i] == k else 0


def alpha0() -> OmegaStream:
    """The stream 1 0 1 0^2 1 0^3 1 0^4 ...; its m-th maximal 0-run has length m."""
    return OmegaStream(_RunLengthWord(), name="alpha0")


def alpha0_prefix_through_run(r: int) -> Word:
    """Prefix of alpha0 ending right after the r-th 0-run (r >= 0)."""
    out: list[int] = []
    for m in range(1, r + 1):
        out.append(1)
        out.extend([0] * m)
    return tuple(out)
