"""Decision procedures for infinite powers A^oo of dictionaries.

``A^oo`` is the set of infinite words a0 a1 a2 ... with every ai a nonempty
member of A. Two acceptors are used:

* :class:`OmegaAcceptor` works for every regular dictionary: it runs the
  word automaton of A and may restart it each time a member has been read;
  a run is accepting when it restarts infinitely often.
* :class:`SafetyAutomaton` works for finite dictionaries only. Its state is
  the set of partially read members over all factorizations of the input
  so far; an infinite word is accepted iff that set never becomes empty.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .dictionary import Dictionary, Finite
from .streams import Lasso
from .words import EMPTY, Word, shortlex_key


class NotAMemberError(ValueError):
    """The infinite word is not in A^oo, so it has no factorization."""


# -- the general acceptor --------------------------------------------------


class OmegaAcceptor:
    """Acceptor for A^oo built on the DFA of the nonempty members of A.

    From state q on letter a the run moves to delta(q, a); when that state is
    accepting it may instead restart at the initial state, and such restart
    moves are the accepting transitions.
    """

    def __init__(self, d: Dictionary):
        self.dictionary = d
        self.dfa = d.nonempty_dfa
        self.n = d.n
        self.start = self.dfa.start
        acc = self.dfa.accepting
        # completes[q][a]: reading a from q finishes a member
        self.completes = tuple(tuple(r in acc for r in row) for row in self.dfa.delta)

    @property
    def is_empty(self) -> bool:
        return self.dfa.is_empty()

    def live_states(self) -> FrozenSet[int]:
        """States from which some accepted infinite continuation exists."""
        if self.is_empty:
            return frozenset()
        # live iff a member can be completed by reading at least one more letter
        finishing = {q for q, row in enumerate(self.completes) if any(row)}
        preds: List[Set[int]] = [set() for _ in self.dfa.delta]
        for q, row in enumerate(self.dfa.delta):
            for r in row:
                preds[r].add(q)
        seen = set(finishing)
        todo = list(seen)
        while todo:
            r = todo.pop()
            for q in preds[r]:
                if q not in seen:
                    seen.add(q)
                    todo.append(q)
        return frozenset(seen)

    def __repr__(self) -> str:
        return f"OmegaAcceptor({self.dictionary.label}, states={self.dfa.num_states})"


def build_omega(d: Dictionary) -> OmegaAcceptor:
    return OmegaAcceptor(d)


def _acceptor(d) -> OmegaAcceptor:
    if isinstance(d, OmegaAcceptor):
        return d
    cached = getattr(d, "_omega_acceptor", None)
    if cached is None:
        cached = OmegaAcceptor(d)
        d._omega_acceptor = cached
    return cached


def member_lasso(acc, alpha: Lasso) -> bool:
    """Is alpha in A^oo?  ``acc`` is an OmegaAcceptor or a Dictionary.

    Searches the product of the acceptor with the position classes of the
    lasso for a reachable cycle through a restart move.
    """
    acc = _acceptor(acc)
    if acc.is_empty:
        return False
    delta, completes, start = acc.dfa.delta, acc.completes, acc.start
    N = alpha.num_classes
    letter = [alpha.letter(c) for c in range(N)]
    nxt = [alpha.next_class(c) for c in range(N)]

    def reach(src: Tuple[int, int]):
        seen = {src}
        todo = [src]
        restarts: Set[int] = set()
        while todo:
            q, c = todo.pop()
            a, c2 = letter[c], nxt[c]
            r = delta[q][a]
            if completes[q][a]:
                restarts.add(c2)
                node = (start, c2)
                if node not in seen:
                    seen.add(node)
                    todo.append(node)
            node = (r, c2)
            if node not in seen:
                seen.add(node)
                todo.append(node)
        return seen, restarts

    seen0, restarts0 = reach((start, 0))
    for c in sorted(restarts0):
        _, back = reach((start, c))
        if c in back:
            return True
    return False


# -- brute force: explicit factorization search ----------------------------


def member_by_search(words: Iterable[Sequence[int]], alpha: Lasso) -> bool:
    """Independent membership test for a FINITE dictionary.

    Unrolls alpha to an explicit prefix and computes, by memoized search,
    the cut positions reachable by factorizing into members. With members of
    length <= L and C position classes, a reachable cut at position >= L*C
    is the end of a factorization with more than C cuts, two of which fall
    in one class: the factorization can be pumped forever. Conversely every
    infinite word of A^oo has reachable cuts arbitrarily far out.
    """
    members = sorted({tuple(w) for w in words if len(w) > 0}, key=shortlex_key)
    if not members:
        return False
    L = max(len(w) for w in members)
    target = L * alpha.num_classes
    text = alpha.prefix(target + L)

    @lru_cache(maxsize=None)
    def far(i: int) -> bool:
        if i >= target:
            return True
        return any(text[i : i + len(w)] == w and far(i + len(w)) for w in members)

    return far(0)


# -- safety automata for finite dictionaries -------------------------------


@dataclass(frozen=True)
class Alive:
    steps: int

    def __str__(self) -> str:
        return f"Alive({self.steps})"


@dataclass(frozen=True)
class Dead:
    step: int

    def __str__(self) -> str:
        return f"Dead({self.step})"


class SafetyAutomaton:
    """Deterministic acceptor of A^oo for a finite dictionary A.

    A state is the set of proper prefixes p of members such that the input
    read so far is (a factorization into members) followed by p. The empty
    set is the dead state. States are explored up front, or on demand when
    ``lazy`` is set (for long members where only single runs are needed);
    the graph analyses always explore everything first.
    """

    def __init__(self, words: Iterable[Sequence[int]], n: int = 2, lazy: bool = False):
        self.n = n
        self.members: FrozenSet[Word] = frozenset(tuple(w) for w in words if len(w) > 0)
        self._proper = {w[:k] for w in self.members for k in range(len(w))}
        start: FrozenSet[Word] = frozenset({EMPTY})
        self.states: List[FrozenSet[Word]] = [start]
        self.index: Dict[FrozenSet[Word], int] = {start: 0}
        self._rows: List[Optional[Tuple[int, ...]]] = [None]
        self._delta: Optional[Tuple[Tuple[int, ...], ...]] = None
        self.start = 0
        self._viable: Optional[FrozenSet[int]] = None
        self._universal: Optional[FrozenSet[int]] = None
        if not lazy:
            self._explore()

    def _successor(self, S: FrozenSet[Word], a: int) -> int:
        T = set()
        for p in S:
            q = p + (a,)
            if q in self.members:
                T.add(EMPTY)
            if q in self._proper:
                T.add(q)
        T = frozenset(T)
        if T not in self.index:
            self.index[T] = len(self.states)
            self.states.append(T)
            self._rows.append(None)
        return self.index[T]

    def _row(self, q: int) -> Tuple[int, ...]:
        row = self._rows[q]
        if row is None:
            row = tuple(self._successor(self.states[q], a) for a in range(self.n))
            self._rows[q] = row
        return row

    def _explore(self) -> None:
        i = 0
        while i < len(self.states):
            self._row(i)
            i += 1
        self._delta = tuple(self._rows)

    def _explore_all(self) -> None:
        if self._delta is None:
            self._explore()

    def step(self, q: int, a: int) -> int:
        return self._row(q)[a]

    @property
    def delta(self) -> Tuple[Tuple[int, ...], ...]:
        self._explore_all()
        return self._delta

    @property
    def dead(self) -> Optional[int]:
        return self.index.get(frozenset())

    @classmethod
    def of(cls, d) -> "SafetyAutomaton":
        if isinstance(d, SafetyAutomaton):
            return d
        if isinstance(d, Dictionary):
            return _safety_cached(d.require_finite(), d.n)
        return _safety_cached(tuple(sorted({tuple(w) for w in d}, key=shortlex_key)), 2)

    @property
    def num_states(self) -> int:
        return len(self.states)

    def is_dead(self, q: int) -> bool:
        return q == self.dead

    def viable(self) -> FrozenSet[int]:
        """States from which an infinite run avoiding the dead state exists."""
        if self._viable is None:
            self._explore_all()
            V = {q for q in range(self.num_states) if q != self.dead}
            changed = True
            while changed:
                changed = False
                for q in list(V):
                    if not any(r in V for r in self.delta[q]):
                        V.discard(q)
                        changed = True
            self._viable = frozenset(V)
        return self._viable

    def universal(self) -> FrozenSet[int]:
        """States from which the dead state is unreachable."""
        if self._universal is None:
            self._explore_all()
            if self.dead is None:
                self._universal = frozenset(range(self.num_states))
            else:
                preds: List[Set[int]] = [set() for _ in self.states]
                for q, row in enumerate(self.delta):
                    for r in row:
                        preds[r].add(q)
                bad = {self.dead}
                todo = [self.dead]
                while todo:
                    r = todo.pop()
                    for q in preds[r]:
                        if q not in bad:
                            bad.add(q)
                            todo.append(q)
                self._universal = frozenset(range(self.num_states)) - bad
        return self._universal

    def reachable(self) -> FrozenSet[int]:
        seen = {self.start}
        todo = [self.start]
        while todo:
            q = todo.pop()
            for r in self.delta[q]:
                if r not in seen:
                    seen.add(r)
                    todo.append(r)
        return frozenset(seen)

    def accepts_lasso(self, alpha: Lasso) -> bool:
        q, c = self.start, 0
        seen = set()
        while (q, c) not in seen:
            seen.add((q, c))
            q = self.step(q, alpha.letter(c))
            if q == self.dead:
                return False
            c = alpha.next_class(c)
        return True

    def __repr__(self) -> str:
        return f"SafetyAutomaton(members={len(self.members)}, states={self.num_states})"


@lru_cache(maxsize=4096)
def _safety_cached(words: Tuple[Word, ...], n: int) -> SafetyAutomaton:
    return SafetyAutomaton(words, n)


LAZY_THRESHOLD = 500  # total member length above which states are built on demand


def build_safety(d) -> SafetyAutomaton:
    """Safety automaton of a finite dictionary.

    Large dictionaries (such as tree codes) get a lazy automaton: a single run
    touches few of the possible pending-prefix sets.
    """
    if isinstance(d, Dictionary):
        words = d.words if isinstance(d.expr, Finite) else d.require_finite()
    else:
        words = tuple(d)
    if sum(map(len, words)) > LAZY_THRESHOLD:
        return SafetyAutomaton(words, d.n if isinstance(d, Dictionary) else 2, lazy=True)
    return SafetyAutomaton.of(d)


def run_safety(sa: SafetyAutomaton, alpha, limit: int):
    """Run on the first ``limit`` letters of a stream; Dead(k) if it dies after k letters."""
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    q = sa.start
    for k in range(limit):
        q = sa.step(q, alpha.letter(k))
        if sa.states[q] == frozenset():
            return Dead(k + 1)
    return Alive(limit)


# -- finite-dictionary decisions -------------------------------------------


def _nonempty_words(d) -> Tuple[Word, ...]:
    if isinstance(d, Dictionary):
        return tuple(w for w in d.require_finite() if w)
    return tuple(sorted({tuple(w) for w in d if len(w) > 0}, key=shortlex_key))


def _alphabet(d, default: int = 2) -> int:
    return d.n if isinstance(d, Dictionary) else default


def universality_bound(d) -> int:
    """Length m at which the first-word criterion is tested: the longest member."""
    words = _nonempty_words(d)
    return max((len(w) for w in words), default=0)


def is_universal(d) -> bool:
    """Is A^oo the set of all infinite words (A finite)?

    True iff every word of length m (the longest member length) has a
    nonempty prefix in A. If some such word s has none, s 0 0 0 ... has no
    first member, so A^oo is not everything; if all do, every infinite word
    factorizes greedily. Explored on the prefix tree of A.
    """
    words = set(_nonempty_words(d))
    n = _alphabet(d)
    if not words:
        return False
    proper = {w[:k] for w in words for k in range(1, len(w))}

    def covered(x: Word) -> bool:
        for a in range(n):
            y = x + (a,)
            if y in words:
                continue
            if y in proper:
                if not covered(y):
                    return False
            else:
                return False
        return True

    return covered(EMPTY)


def universal_by_enumeration(d) -> bool:
    """The same criterion by listing every word of length m (small inputs only)."""
    from itertools import product

    words = set(_nonempty_words(d))
    n = _alphabet(d)
    m = universality_bound(d)
    if not words:
        return False
    return all(any(s[:q] in words for q in range(1, m + 1)) for s in product(range(n), repeat=m))


EMPTY_CLASS, FULL_CLASS, CLOPEN_CLASS, CLOSED_NOT_OPEN_CLASS = "Empty", "Full", "Clopen", "ClosedNotOpen"


def topo_class(d) -> str:
    """Topological class of A^oo for a finite dictionary.

    A^oo is always closed here. It is open iff every accepted run of the
    safety automaton eventually reaches a state from which the dead state is
    unreachable, i.e. iff there is no reachable cycle through viable states
    that are not of that kind.
    """
    words = _nonempty_words(d)
    if not words:
        return EMPTY_CLASS
    if is_universal(d):
        return FULL_CLASS
    sa = SafetyAutomaton.of(d)
    pending = (sa.reachable() & sa.viable()) - sa.universal()
    if _has_cycle(pending, sa.delta):
        return CLOSED_NOT_OPEN_CLASS
    return CLOPEN_CLASS


def _has_cycle(nodes: FrozenSet[int], delta) -> bool:
    color: Dict[int, int] = {}
    for root in nodes:
        if root in color:
            continue
        color[root] = 1
        stack = [(root, iter(delta[root]))]
        while stack:
            q, it = stack[-1]
            for r in it:
                if r not in nodes:
                    continue
                c = color.get(r, 0)
                if c == 1:
                    return True
                if c == 0:
                    color[r] = 1
                    stack.append((r, iter(delta[r])))
                    break
            else:
                color[q] = 2
                stack.pop()
    return False


def included(a, b) -> bool:
    """A^oo <= B^oo, for B finite (A finite, or any regular dictionary).

    Fails iff some finite word kills every run of B's safety automaton while
    A still has an accepted continuation.
    """
    sb = SafetyAutomaton.of(b)
    if not (isinstance(a, Dictionary) and not a.is_finite):
        sa = SafetyAutomaton.of(a)
        if sa.n != sb.n and isinstance(a, Dictionary) and isinstance(b, Dictionary):
            raise ValueError("alphabet mismatch")
        viable = sa.viable()
        if sa.start not in viable:
            return True
        seen = {(sa.start, sb.start)}
        todo = list(seen)
        while todo:
            p, q = todo.pop()
            for x in range(sb.n):
                p2, q2 = sa.delta[p][x], sb.delta[q][x]
                if p2 not in viable:
                    continue
                if q2 == sb.dead:
                    return False
                if (p2, q2) not in seen:
                    seen.add((p2, q2))
                    todo.append((p2, q2))
        return True
    acc = _acceptor(a)
    live = acc.live_states()
    if acc.start not in live:
        return True
    delta, completes = acc.dfa.delta, acc.completes
    seen = {(acc.start, sb.start)}
    todo = list(seen)
    while todo:
        p, q = todo.pop()
        for x in range(acc.n):
            q2 = sb.delta[q][x]
            succ = [delta[p][x]] + ([acc.start] if completes[p][x] else [])
            for p2 in succ:
                if p2 not in live:
                    continue
                if q2 == sb.dead:
                    return False
                if (p2, q2) not in seen:
                    seen.add((p2, q2))
                    todo.append((p2, q2))
    return True


def equivalent(a, b) -> bool:
    """A^oo == B^oo for finite dictionaries."""
    return included(a, b) and included(b, a)


def certify_equal(a: Dictionary, b: Dictionary, max_len: int = 8) -> Optional[bool]:
    """Sound semi-decision of A^oo == B^oo when B's members all belong to A.

    B <= A gives B^oo <= A^oo. For the converse it looks for a finite
    F = {members of B of length <= p} with A^oo <= F^oo (decidable because
    F^oo is closed); then A^oo <= F^oo <= B^oo. Returns True when certified,
    None when no such F exists up to ``max_len``. Raises if B is not a
    subset of A.
    """
    from .automata import included_words

    if not included_words(b.dfa, a.dfa):
        raise ValueError("certify_equal needs every member of the second dictionary to lie in the first")
    if b.is_finite:
        return True if included(a, b) else False
    for p in range(1, max_len + 1):
        core = [w for w in b.dfa.words_upto(p) if w]
        if core and included(a, core):
            return True
    return None


def minimal_generator(d) -> Tuple[Word, ...]:
    """Inclusion-minimal B <= A with B^oo == A^oo (A finite).

    Members are tried for removal longest first (shortlex descending).
    """
    words = list(_nonempty_words(d))
    n = _alphabet(d)
    reference = Dictionary.finite(words, n)
    current = list(words)
    for w in sorted(words, key=shortlex_key, reverse=True):
        trial = [x for x in current if x != w]
        if equivalent(Dictionary.finite(trial, n), reference):
            current = trial
    return tuple(sorted(current, key=shortlex_key))


def greedy_decompose(d: Dictionary, alpha: Lasso, k: int) -> List[Word]:
    """First k members of the leftmost-minimal factorization of alpha.

    Each chunk is the shortest nonempty member that is a prefix of the
    remaining suffix and leaves a suffix still in A^oo.
    """
    acc = _acceptor(d)
    if not member_lasso(acc, alpha):
        raise NotAMemberError(f"{alpha} is not in the infinite power of {d.label}")
    delta, accepting = acc.dfa.delta, acc.dfa.accepting
    member_from: Dict[int, bool] = {}

    def ok_from(pos: int) -> bool:
        c = alpha.position_class(pos)
        if c not in member_from:
            member_from[c] = member_lasso(acc, alpha.shift(pos))
        return member_from[c]

    chunks: List[Word] = []
    pos = 0
    for _ in range(k):
        q = acc.start
        seen = set()
        length = 0
        while True:
            q = delta[q][alpha.letter(pos + length)]
            length += 1
            if q in accepting and ok_from(pos + length):
                break
            key = (q, alpha.position_class(pos + length))
            if key in seen:
                raise AssertionError(f"no valid chunk at position {pos} of {alpha}")
            seen.add(key)
        chunks.append(alpha.prefix(pos + length)[pos:])
        pos += length
    return chunks
