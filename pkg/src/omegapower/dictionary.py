"""Dictionaries: sets of finite words presented as regular expressions or oracles."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union as TUnion

from . import automata
from .automata import DFA
from .words import (
    EMPTY,
    Word,
    check_word,
    compatible,
    format_word,
    is_prefix,
    is_strict_prefix,
    shortlex_key,
)


# -- expression tree -------------------------------------------------------


class Expr:
    """Base class of dictionary expressions."""

    def __or__(self, other: "Expr") -> "Expr":
        return Union((self, other))

    def __sub__(self, other: "Expr") -> "Expr":
        return Diff(self, other)


@dataclass(frozen=True)
class Finite(Expr):
    words: FrozenSet[Word]

    def __init__(self, words: Iterable[Sequence[int]] = ()):
        object.__setattr__(self, "words", frozenset(tuple(w) for w in words))


@dataclass(frozen=True)
class Ext(Expr):
    """All words having ``prefix`` as a (non-strict) prefix."""

    prefix: Word


@dataclass(frozen=True)
class Letter(Expr):
    letter: int


@dataclass(frozen=True)
class Concat(Expr):
    parts: Tuple[Expr, ...]


@dataclass(frozen=True)
class Union(Expr):
    parts: Tuple[Expr, ...]


@dataclass(frozen=True)
class Star(Expr):
    """Kleene star; on a word set X this is the set of all finite concatenations of members."""

    inner: Expr


StarWords = Star


@dataclass(frozen=True)
class Diff(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class AllWords(Expr):
    """Every finite word over the alphabet."""


def evaluate(e: Expr, w: Word, n: int) -> bool:
    """Structural membership, straight from the definitions (no automaton).

    Exponential in the worst case; meant as a cross-check for short words.
    """
    return _eval(e, tuple(w), n)


def _eval(e: Expr, w: Word, n: int) -> bool:
    if isinstance(e, Finite):
        return w in e.words
    if isinstance(e, Ext):
        return is_prefix(e.prefix, w)
    if isinstance(e, Letter):
        return w == (e.letter,)
    if isinstance(e, AllWords):
        return True
    if isinstance(e, _Compiled):
        return e.dfa.accepts(w)
    if isinstance(e, Union):
        return any(_eval(p, w, n) for p in e.parts)
    if isinstance(e, Diff):
        return _eval(e.left, w, n) and not _eval(e.right, w, n)
    if isinstance(e, Concat):
        return _eval_concat(e.parts, w, n)
    if isinstance(e, Star):
        return _eval_star(e.inner, w, n)
    raise TypeError(f"unknown expression node {e!r}")


def _eval_concat(parts: Sequence[Expr], w: Word, n: int) -> bool:
    if not parts:
        return not w
    head, rest = parts[0], parts[1:]
    return any(_eval(head, w[:k], n) and _eval_concat(rest, w[k:], n) for k in range(len(w) + 1))


def _eval_star(inner: Expr, w: Word, n: int) -> bool:
    @lru_cache(maxsize=None)
    def ok(i: int) -> bool:
        if i == len(w):
            return True
        return any(_eval(inner, w[i:j], n) and ok(j) for j in range(i + 1, len(w) + 1))

    return ok(0)


def compile_expr(e: Expr, n: int) -> DFA:
    """Compile an expression into a minimal complete DFA."""
    if isinstance(e, Finite):
        return automata.trie_dfa(sorted(e.words), n).minimize()
    if isinstance(e, Ext):
        check_word(e.prefix, n)
        return automata.ext_dfa(e.prefix, n)
    if isinstance(e, Letter):
        return automata.trie_dfa([(e.letter,)], n).minimize()
    if isinstance(e, AllWords):
        return automata.DFA(n, ((0,) * n,), 0, frozenset({0}))
    if isinstance(e, _Compiled):
        return e.dfa
    if isinstance(e, Union):
        if not e.parts:
            return automata.empty_dfa(n)
        d = compile_expr(e.parts[0], n)
        for p in e.parts[1:]:
            d = automata.product(d, compile_expr(p, n), "union")
        return d.minimize()
    if isinstance(e, Diff):
        return automata.product(compile_expr(e.left, n), compile_expr(e.right, n), "diff").minimize()
    if isinstance(e, Concat):
        return automata.concat_dfa([compile_expr(p, n) for p in e.parts], n)
    if isinstance(e, Star):
        return automata.star_dfa(compile_expr(e.inner, n))
    raise TypeError(f"unknown expression node {e!r}")


# -- dictionaries ----------------------------------------------------------


class Dictionary:
    """A regular dictionary over the alphabet {0..n-1}.

    The empty word may belong to the language; all infinite-word machinery
    works with the language minus the empty word.
    """

    def __init__(self, expr: Expr, n: int = 2, name: str = ""):
        if not 2 <= n <= 16:
            raise ValueError(f"alphabet size must be in 2..16, got {n}")
        self.expr = expr
        self.n = n
        self.name = name

    @classmethod
    def finite(cls, words: Iterable[Sequence[int]], n: int = 2, name: str = "") -> "Dictionary":
        words = [check_word(w, n) for w in words]
        return cls(Finite(words), n, name)

    @classmethod
    def from_dfa(cls, dfa: DFA, name: str = "") -> "Dictionary":
        d = cls(_Compiled(dfa), dfa.n, name)
        d.__dict__["dfa"] = dfa
        return d

    @cached_property
    def dfa(self) -> DFA:
        return compile_expr(self.expr, self.n)

    @cached_property
    def nonempty_dfa(self) -> DFA:
        """Automaton for the language without the empty word."""
        d = self.dfa
        if d.start not in d.accepting:
            return d
        return automata.product(d, automata.epsilon_dfa(self.n), "diff").minimize()

    def contains(self, w: Sequence[int]) -> bool:
        return self.dfa.accepts(w)

    __contains__ = contains

    @cached_property
    def is_finite(self) -> bool:
        return self.dfa.is_finite_language()

    @cached_property
    def words(self) -> Tuple[Word, ...]:
        """Members in shortlex order; raises ValueError for infinite dictionaries."""
        if isinstance(self.expr, Finite):
            return tuple(sorted(self.expr.words, key=shortlex_key))
        return tuple(self.dfa.words())

    @cached_property
    def nonempty_words(self) -> Tuple[Word, ...]:
        return tuple(w for w in self.words if w)

    def require_finite(self) -> Tuple[Word, ...]:
        if not self.is_finite:
            raise ValueError(f"dictionary {self.label} is infinite; this operation needs a finite one")
        return self.words

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        if isinstance(self.expr, Finite):
            return "{" + ", ".join(format_word(w) for w in sorted(self.expr.words, key=shortlex_key)) + "}"
        return repr(self.expr)

    def __repr__(self) -> str:
        return f"Dictionary({self.label}, n={self.n})"


@dataclass(frozen=True)
class _Compiled(Expr):
    dfa: DFA


class OracleDictionary:
    """A dictionary known only through a decidable membership predicate."""

    def __init__(self, predicate: Callable[[Word], bool], n: int = 2, name: str = "oracle"):
        self.predicate = predicate
        self.n = n
        self.name = name

    def contains(self, w: Sequence[int]) -> bool:
        return bool(self.predicate(tuple(w)))

    __contains__ = contains

    @property
    def label(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"OracleDictionary({self.name}, n={self.n})"


def _half_ones_predicate(s: Word) -> bool:
    ones = 0
    for i in range(len(s) + 1):
        if 2 * ones < i:
            return False
        if i < len(s) and s[i] == 1:
            ones += 1
    return True


def half_ones_dictionary() -> OracleDictionary:
    """Words s with 2 * #{j < i : s(j) = 1} >= i for every i <= |s|.

    Its infinite power is closed, yet it is generated by no finite subset.
    """
    return OracleDictionary(_half_ones_predicate, 2, name="half-ones")


AnyDictionary = TUnion[Dictionary, OracleDictionary]


def contains(d: AnyDictionary, w: Sequence[int]) -> bool:
    return d.contains(w)


def decomposes(d: AnyDictionary, w: Sequence[int], max_len: Optional[int] = None) -> bool:
    """Is w a concatenation of nonempty members of d, each of length <= max_len?"""
    w = tuple(w)
    top = len(w) if max_len is None else max_len

    @lru_cache(maxsize=None)
    def ok(i: int) -> bool:
        if i == len(w):
            return True
        return any(d.contains(w[i:j]) and ok(j) for j in range(i + 1, min(len(w), i + top) + 1))

    return ok(0)


def prefix_decompositions(d: AnyDictionary, w: Sequence[int], max_len: Optional[int] = None) -> List[Tuple[Word, ...]]:
    """Every factorization of w into nonempty members (each of length <= max_len)."""
    w = tuple(w)
    top = len(w) if max_len is None else max_len

    @lru_cache(maxsize=None)
    def go(i: int) -> Tuple[Tuple[Word, ...], ...]:
        if i == len(w):
            return ((),)
        out = []
        for j in range(i + 1, min(len(w), i + top) + 1):
            if d.contains(w[i:j]):
                out.extend((w[i:j],) + rest for rest in go(j))
        return tuple(out)

    return list(go(0))


# -- structural predicates on finite dictionaries --------------------------


def _finite_words(d) -> Tuple[Word, ...]:
    if isinstance(d, Dictionary):
        return d.require_finite()
    return tuple(sorted({tuple(w) for w in d}, key=shortlex_key))


def is_antichain(d) -> bool:
    """No member is a strict prefix of another member."""
    words = _finite_words(d)
    return not any(is_strict_prefix(s, t) for s in words for t in words)


def chain_decomposition(d) -> List[List[Word]]:
    """Greedy partition into chains, members taken in shortlex order.

    Each word joins the first part all of whose words it is compatible with;
    otherwise it opens a new part.
    """
    parts: List[List[Word]] = []
    for w in _finite_words(d):
        for part in parts:
            if all(compatible(w, x) for x in part):
                part.append(w)
                break
        else:
            parts.append([w])
    return parts


def is_code(d) -> bool:
    """Unique decipherability by closure of dangling suffixes."""
    words = set(_finite_words(d))
    if EMPTY in words:
        raise ValueError("a code cannot contain the empty word")
    dangling = set()
    for x in words:
        for y in words:
            if x != y and is_prefix(x, y):
                dangling.add(y[len(x):])
    todo = list(dangling)
    while todo:
        s = todo.pop()
        if s in words:
            return False
        for c in words:
            if is_strict_prefix(s, c):
                r = c[len(s):]
            elif is_strict_prefix(c, s):
                r = s[len(c):]
            else:
                continue
            if r not in dangling:
                dangling.add(r)
                todo.append(r)
    return True
