"""Constructive reductions between dictionaries.

* Binary encoding of larger alphabets with fixed-width letter codes.
* Antichains {0^k 1 : gamma(k) = 1} built from 0/1 sequences.
* Coding finite trees on the naturals as dictionaries over {0, 1} whose
  words are consecutive stretches of the stream alpha0 = 1 0 1 0^2 1 0^3 ...

The tree code of node s covers a stretch of runs of alpha0: the root takes
runs 1..2 and node s m takes runs 2 M_s + 1 .. 2 M_{s m}, where
M_s = q_0^(s(0)+1) ... q_{k-1}^(s(k-1)+1) + 1 with q_i the i-th prime and,
for the root, M = 1 (the value that makes the root's word 1 0 1 0^2).
These words get astronomically long (M is a product of prime powers), so the
tree-level computations work with (first run, last run) intervals and only
materialize words that are short enough.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .automata import DFA
from .dictionary import Dictionary
from .engine import Dead
from .streams import Lasso, alpha0, alpha0_prefix_through_run
from .words import Word, shortlex_key

Node = Tuple[int, ...]
Tree = FrozenSet[Node]


# -- alphabet change -------------------------------------------------------


def code_width(n: int) -> int:
    """Least p with n <= 2^p."""
    if n < 2:
        raise ValueError("alphabet size must be at least 2")
    p = 0
    while (1 << p) < n:
        p += 1
    return p


def sigma(m: int, p: int) -> Word:
    """m written in binary on p digits (the m-th word of length p in lexicographic order)."""
    return tuple((m >> (p - 1 - i)) & 1 for i in range(p))


def encode_word(w: Sequence[int], n: int) -> Word:
    p = code_width(n)
    out: List[int] = []
    for a in w:
        if not 0 <= a < n:
            raise ValueError(f"letter {a} outside alphabet of size {n}")
        out.extend(sigma(a, p))
    return tuple(out)


def encode_lasso(alpha: Lasso, n: int) -> Lasso:
    return Lasso.of(encode_word(alpha.head, n), encode_word(alpha.cycle, n))


def _encode_dfa(d: DFA) -> DFA:
    n, p = d.n, code_width(d.n)
    # states: (q, bits read inside the current letter); one shared dead state
    index: Dict[object, int] = {}
    order: List[object] = []

    def sid(key) -> int:
        if key not in index:
            index[key] = len(order)
            order.append(key)
        return index[key]

    sid((d.start, ()))
    dead = sid("dead")
    rows: List[Tuple[int, ...]] = []
    i = 0
    while i < len(order):
        key = order[i]
        if key == "dead":
            rows.append((dead, dead))
        else:
            q, bits = key
            row = []
            for x in (0, 1):
                b2 = bits + (x,)
                if len(b2) < p:
                    row.append(sid((q, b2)))
                else:
                    m = int("".join(map(str, b2)), 2)
                    row.append(sid((d.delta[q][m], ())) if m < n else dead)
            rows.append(tuple(row))
        i += 1
    acc = frozenset(index[k] for k in order if k != "dead" and k[1] == () and k[0] in d.accepting)
    return DFA(2, tuple(rows), 0, acc).minimize()


@dataclass(frozen=True)
class BinaryEncoding:
    """The encoded dictionary together with the letter-wise encoders."""

    dictionary: Dictionary
    n: int
    width: int

    def word(self, w: Sequence[int]) -> Word:
        return encode_word(w, self.n)

    def lasso(self, alpha: Lasso) -> Lasso:
        return encode_lasso(alpha, self.n)


def encode_binary(d: Dictionary) -> BinaryEncoding:
    """Image of d under the fixed-width letter code; the identity for n = 2."""
    enc = Dictionary.from_dfa(_encode_dfa(d.dfa), name=f"bin({d.label})")
    return BinaryEncoding(enc, d.n, code_width(d.n))


# -- simple word codes -----------------------------------------------------


def psi(t: Sequence[int]) -> Word:
    """0^t(0) 1 0^t(1) 1 ... 0^t(k-1) 1."""
    out: List[int] = []
    for x in t:
        if x < 0:
            raise ValueError("entries must be natural numbers")
        out.extend([0] * x)
        out.append(1)
    return tuple(out)


def phi_pf(gamma: Sequence[int]) -> Dictionary:
    """{0^k 1 : gamma(k) = 1}, an antichain and a code."""
    words = [(0,) * k + (1,) for k, g in enumerate(gamma) if g == 1]
    if any(g not in (0, 1) for g in gamma):
        raise ValueError("gamma must be a 0/1 sequence")
    return Dictionary.finite(words, 2)


# -- tree coding -----------------------------------------------------------


def primes(k: int) -> List[int]:
    """The first k primes."""
    from sympy import prime

    return [int(prime(i)) for i in range(1, k + 1)]


def m_code(s: Sequence[int]) -> int:
    """q_0^(s(0)+1) ... q_{k-1}^(s(k-1)+1) + 1, and 1 for the empty sequence."""
    s = tuple(s)
    if not s:
        return 1
    if any(x < 0 for x in s):
        raise ValueError("entries must be natural numbers")
    value = 1
    for q, x in zip(primes(len(s)), s):
        value *= q ** (x + 1)
    return value + 1


def phi_runs(s: Sequence[int]) -> Tuple[int, int]:
    """(first, last) run of alpha0 covered by the code word of node s."""
    s = tuple(s)
    if not s:
        return 1, 2
    return 2 * m_code(s[:-1]) + 1, 2 * m_code(s)


def runs_length(first: int, last: int) -> int:
    """Length of 1 0^first 1 0^(first+1) ... 1 0^last."""
    count = last - first + 1
    return count + (first + last) * count // 2


def run_start(r: int) -> int:
    """Position in alpha0 of the 1 that opens run r (r >= 1)."""
    return (r - 1) * (r + 2) // 2


def runs_word(first: int, last: int) -> Word:
    out: List[int] = []
    for j in range(first, last + 1):
        out.append(1)
        out.extend([0] * j)
    return tuple(out)


DEFAULT_MAX_LENGTH = 1_000_000


def phi_word(s: Sequence[int], max_length: int = DEFAULT_MAX_LENGTH) -> Word:
    """The code word of node s; refuses words longer than ``max_length``."""
    first, last = phi_runs(s)
    size = runs_length(first, last)
    if size > max_length:
        raise ValueError(f"code word of {tuple(s)} has {size} letters, above the limit {max_length}")
    return runs_word(first, last)


def check_tree(T: Iterable[Sequence[int]]) -> Tree:
    nodes = frozenset(tuple(t) for t in T)
    for t in nodes:
        if any(x < 0 for x in t):
            raise ValueError(f"negative label in {t}")
        if t and t[:-1] not in nodes:
            raise ValueError(f"not prefix-closed: {t} without {t[:-1]}")
    return nodes


def tree_words_max_length(T: Tree) -> int:
    return max((runs_length(*phi_runs(t)) for t in T), default=0)


def tree_dict(T: Iterable[Sequence[int]], max_length: int = DEFAULT_MAX_LENGTH) -> Dictionary:
    """{phi_word(t) : t in T} as an explicit finite dictionary."""
    T = check_tree(T)
    words = [phi_word(t, max_length) for t in sorted(T)]
    return Dictionary.finite(words, 2, name="tree")


def branch_check(gamma: Sequence[int], L: int, max_length: int = 20_000) -> bool:
    """Do the code words of the first L+1 nodes of the branch gamma spell a prefix of alpha0?

    Compared letter by letter when the concatenation has at most
    ``max_length`` letters; above that the comparison is done run by run.
    """
    gamma = tuple(gamma)
    if not 0 <= L <= len(gamma):
        raise ValueError("L must lie in 0..len(gamma)")
    pieces = [phi_runs(gamma[:k]) for k in range(L + 1)]
    total = sum(runs_length(a, b) for a, b in pieces)
    if total <= max_length:
        word = tuple(x for a, b in pieces for x in runs_word(a, b))
        reference = alpha0_prefix_through_run(max(b for _, b in pieces) + 1)
        return word == reference[: len(word)]
    expected = 1
    for a, b in pieces:
        if a != expected or b < a:
            return False
        expected = b + 1
    return True


def tree_rank(T: Iterable[Sequence[int]]) -> int:
    """0 for the empty tree, else height of the root + 1 (leaves have height 0)."""
    T = check_tree(T)
    if not T:
        return 0
    children: Dict[Node, List[Node]] = {t: [] for t in T}
    for t in T:
        if t:
            children[t[:-1]].append(t)

    @lru_cache(maxsize=None)
    def height(t: Node) -> int:
        return max((height(c) + 1 for c in children[t]), default=0)

    return height(()) + 1


def alpha0_rank(T: Iterable[Sequence[int]]) -> int:
    """Rank of the tree of factorizations of prefixes of alpha0 into code words of T.

    A code word covering runs a..b matches alpha0 only at the 1 opening run a
    (every code word spans at least two runs, and its inner runs pin the
    place), after which the next cut opens run b + 1.
    """
    T = check_tree(T)
    by_first: Dict[int, List[int]] = {}
    for t in T:
        a, b = phi_runs(t)
        by_first.setdefault(a, []).append(b)

    @lru_cache(maxsize=None)
    def height(r: int) -> int:
        return max((height(b + 1) + 1 for b in by_first.get(r, ())), default=0)

    return height(1) + 1


def alpha0_rank_explicit(T: Iterable[Sequence[int]], max_length: int = 20_000) -> int:
    """The same rank by letter-level matching on an explicit prefix of alpha0."""
    words = tree_dict(T, max_length).nonempty_words
    longest_run = max((max(_runs_of(w)) for w in words), default=0)
    text = alpha0_prefix_through_run(longest_run + 1)

    @lru_cache(maxsize=None)
    def height(pos: int) -> int:
        return max(
            (height(pos + len(w)) + 1 for w in words if text[pos : pos + len(w)] == w),
            default=0,
        )

    return height(0) + 1


def _runs_of(w: Word) -> List[int]:
    out, run = [], -1
    for x in w:
        if x == 1:
            if run >= 0:
                out.append(run)
            run = 0
        else:
            run += 1
    if run >= 0:
        out.append(run)
    return out or [0]


def death_bound(T: Iterable[Sequence[int]]) -> int:
    """Twice the longest code word plus the length of the root's word."""
    return 2 * tree_words_max_length(check_tree(T)) + runs_length(1, 2)


def alpha0_death(T: Iterable[Sequence[int]]) -> Dead:
    """Where the safety automaton of the tree dictionary dies on alpha0, run by run.

    The set of pending partial words is nonempty exactly on the union of the
    intervals [c, c + lcp] over reachable cuts c and code words w, lcp being
    the longest common prefix of w and the suffix of alpha0 at c. A word
    whose first run a differs from the run r opening at c agrees with alpha0
    on 1 + min(a, r) letters; one with a == r matches completely and makes
    the start of run b + 1 a reachable cut. The union is an interval [0, D]
    and the automaton dies reading letter D + 1.
    """
    T = check_tree(T)
    intervals = [phi_runs(t) for t in T]
    for a, b in intervals:
        if b <= a:
            raise AssertionError("code words span at least two runs")
    reached = {1}
    todo = [1]
    while todo:
        r = todo.pop()
        for a, b in intervals:
            if a == r and b + 1 not in reached:
                reached.add(b + 1)
                todo.append(b + 1)
    D = 0
    for r in reached:
        c = run_start(r)
        D = max(D, c)
        for a, b in intervals:
            if a != r:
                D = max(D, c + 1 + min(a, r))
    return Dead(D + 1)


# -- the dictionary with the E and F extensions ----------------------------


def is_alpha0_factor(t: Sequence[int]) -> bool:
    """Does t occur inside alpha0?

    Any occurrence lies within the runs up to |t| + 2: an inner run of t
    fixes its own index, and t with at most one 1 fits next to a run of
    length at most |t| + 1.
    """
    t = tuple(t)
    if not t:
        return True
    text = alpha0_prefix_through_run(len(t) + 2)
    needle = bytes(t)
    return needle in bytes(text)


def phi_prime_member(T: Iterable[Sequence[int]], s: Sequence[int]) -> bool:
    """Is s a code word of T, or an extension of an element of E or F?

    E holds (alpha0 restricted to p) r with r != alpha0(p) and p != 2.
    F holds concatenations of code words that do not occur inside alpha0.
    Only code words no longer than s can matter, so only those are built.
    """
    T = check_tree(T)
    s = tuple(s)
    words = sorted(
        {phi_word(t) for t in T if runs_length(*phi_runs(t)) <= len(s)},
        key=shortlex_key,
    )
    if s in words:
        return True
    prefix = alpha0().prefix(len(s))
    deviation = next((i for i in range(len(s)) if s[i] != prefix[i]), None)
    if deviation is not None and deviation != 2:
        return True
    # F: depth-first over concatenations of code words that are prefixes of s
    stack = [0]
    seen = {0}
    while stack:
        pos = stack.pop()
        for w in words:
            end = pos + len(w)
            if s[pos:end] == w and end not in seen:
                if not is_alpha0_factor(s[:end]):
                    return True
                seen.add(end)
                stack.append(end)
    return False


# -- tree enumeration ------------------------------------------------------


def trees_upto(max_nodes: int, max_label: int) -> List[Tree]:
    """Every prefix-closed tree with at most max_nodes nodes and labels < max_label, empty tree included."""
    found = {frozenset()}
    frontier = {frozenset({()})} if max_nodes >= 1 else set()
    found |= frontier
    for _ in range(max_nodes - 1):
        nxt = set()
        for T in frontier:
            for t in T:
                for m in range(max_label):
                    c = t + (m,)
                    if c not in T:
                        nxt.add(T | {c})
        nxt -= found
        found |= nxt
        frontier = nxt
    return sorted(found, key=lambda T: (len(T), sorted(T)))
