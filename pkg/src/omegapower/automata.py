"""Deterministic word automata and the constructions used to compile dictionaries."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from .words import Word


@dataclass(frozen=True)
class DFA:
    """Complete DFA over letters 0..n-1 with states 0..len(delta)-1."""

    n: int
    delta: Tuple[Tuple[int, ...], ...]
    start: int
    accepting: FrozenSet[int]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def num_states(self) -> int:
        return len(self.delta)

    def step(self, q: int, a: int) -> int:
        return self.delta[q][a]

    def run(self, w: Iterable[int], q: Optional[int] = None) -> int:
        q = self.start if q is None else q
        for a in w:
            q = self.delta[q][a]
        return q

    def accepts(self, w: Iterable[int]) -> bool:
        return self.run(w) in self.accepting

    def coreachable(self) -> FrozenSet[int]:
        """States from which some accepting state is reachable."""
        if "coreach" not in self._cache:
            preds: List[Set[int]] = [set() for _ in self.delta]
            for q, row in enumerate(self.delta):
                for r in row:
                    preds[r].add(q)
            seen = set(self.accepting)
            todo = list(seen)
            while todo:
                r = todo.pop()
                for q in preds[r]:
                    if q not in seen:
                        seen.add(q)
                        todo.append(q)
            self._cache["coreach"] = frozenset(seen)
        return self._cache["coreach"]

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

    def is_empty(self) -> bool:
        return self.start not in self.coreachable()

    def is_finite_language(self) -> bool:
        """No cycle through a useful (reachable and co-reachable) state."""
        useful = self.reachable() & self.coreachable()
        color: Dict[int, int] = {}
        for root in useful:
            if root in color:
                continue
            color[root] = 1
            stack = [(root, iter(self.delta[root]))]
            while stack:
                q, it = stack[-1]
                for r in it:
                    if r not in useful:
                        continue
                    c = color.get(r, 0)
                    if c == 1:
                        return False
                    if c == 0:
                        color[r] = 1
                        stack.append((r, iter(self.delta[r])))
                        break
                else:
                    color[q] = 2
                    stack.pop()
        return True

    def words(self) -> List[Word]:
        """All accepted words, shortlex-sorted. Only for finite languages."""
        if not self.is_finite_language():
            raise ValueError("language is infinite")
        useful = self.coreachable()
        out: List[Word] = []
        todo: List[Tuple[int, Word]] = [(self.start, ())] if self.start in useful else []
        while todo:
            q, w = todo.pop()
            if q in self.accepting:
                out.append(w)
            for a, r in enumerate(self.delta[q]):
                if r in useful:
                    todo.append((r, w + (a,)))
        return sorted(out, key=lambda w: (len(w), w))

    def words_upto(self, length: int) -> Iterator[Word]:
        """Accepted words of length <= length, shortlex order."""
        useful = self.coreachable()
        layer: List[Tuple[int, Word]] = [(self.start, ())] if self.start in useful else []
        for k in range(length + 1):
            for q, w in layer:
                if q in self.accepting:
                    yield w
            if k == length:
                break
            layer = [
                (r, w + (a,))
                for q, w in layer
                for a, r in enumerate(self.delta[q])
                if r in useful
            ]

    def complement(self) -> "DFA":
        return DFA(self.n, self.delta, self.start, frozenset(range(self.num_states)) - self.accepting)

    def minimize(self) -> "DFA":
        return minimize(self)


def product(d1: DFA, d2: DFA, mode: str) -> DFA:
    """Product automaton; mode is one of 'union', 'inter', 'diff'."""
    if d1.n != d2.n:
        raise ValueError("alphabet mismatch")
    index: Dict[Tuple[int, int], int] = {}
    delta: List[Tuple[int, ...]] = []
    acc: Set[int] = set()
    start = (d1.start, d2.start)
    index[start] = 0
    order = [start]
    i = 0
    while i < len(order):
        p, q = order[i]
        row = []
        for a in range(d1.n):
            nxt = (d1.delta[p][a], d2.delta[q][a])
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        delta.append(tuple(row))
        in1, in2 = p in d1.accepting, q in d2.accepting
        if (mode == "union" and (in1 or in2)) or (mode == "inter" and in1 and in2) or (
            mode == "diff" and in1 and not in2
        ):
            acc.add(i)
        i += 1
    return DFA(d1.n, tuple(delta), 0, frozenset(acc))


class NFA:
    """Nondeterministic automaton with epsilon moves, only used as a build step."""

    def __init__(self, n: int):
        self.n = n
        self.trans: List[Dict[int, Set[int]]] = []
        self.eps: List[Set[int]] = []
        self.start = 0
        self.accepting: Set[int] = set()

    def new_state(self) -> int:
        self.trans.append({})
        self.eps.append(set())
        return len(self.trans) - 1

    def add(self, p: int, a: int, q: int) -> None:
        self.trans[p].setdefault(a, set()).add(q)

    def embed(self, d: DFA) -> Tuple[int, Set[int]]:
        """Copy a DFA in; returns (start, accepting states)."""
        base = len(self.trans)
        for _ in range(d.num_states):
            self.new_state()
        for q, row in enumerate(d.delta):
            for a, r in enumerate(row):
                self.add(base + q, a, base + r)
        return base + d.start, {base + q for q in d.accepting}

    def closure(self, states: Iterable[int]) -> FrozenSet[int]:
        seen = set(states)
        todo = list(seen)
        while todo:
            q = todo.pop()
            for r in self.eps[q]:
                if r not in seen:
                    seen.add(r)
                    todo.append(r)
        return frozenset(seen)

    def determinize(self) -> DFA:
        start = self.closure([self.start])
        index = {start: 0}
        order = [start]
        delta = []
        acc = set()
        i = 0
        while i < len(order):
            S = order[i]
            row = []
            for a in range(self.n):
                T = self.closure(r for q in S for r in self.trans[q].get(a, ()))
                if T not in index:
                    index[T] = len(order)
                    order.append(T)
                row.append(index[T])
            delta.append(tuple(row))
            if S & self.accepting:
                acc.add(i)
            i += 1
        return DFA(self.n, tuple(delta), 0, frozenset(acc))


def concat_dfa(parts: List[DFA], n: int) -> DFA:
    if not parts:
        return epsilon_dfa(n)
    nfa = NFA(n)
    pieces = [nfa.embed(d) for d in parts]
    nfa.start = pieces[0][0]
    for (s1, acc1), (s2, _) in zip(pieces, pieces[1:]):
        for q in acc1:
            nfa.eps[q].add(s2)
    nfa.accepting = set(pieces[-1][1])
    return nfa.determinize().minimize()


def star_dfa(d: DFA) -> DFA:
    nfa = NFA(d.n)
    hub = nfa.new_state()
    s, acc = nfa.embed(d)
    nfa.start = hub
    nfa.eps[hub].add(s)
    for q in acc:
        nfa.eps[q].add(hub)
    nfa.accepting = {hub}
    return nfa.determinize().minimize()


def trie_dfa(words: Iterable[Word], n: int) -> DFA:
    """DFA accepting exactly a finite word set (state 0 start, last state dead)."""
    trans: List[Dict[int, int]] = [{}]
    acc = set()
    for w in words:
        q = 0
        for a in w:
            if not 0 <= a < n:
                raise ValueError(f"letter {a} outside alphabet of size {n}")
            if a not in trans[q]:
                trans.append({})
                trans[q][a] = len(trans) - 1
            q = trans[q][a]
        acc.add(q)
    dead = len(trans)
    delta = tuple(tuple(t.get(a, dead) for a in range(n)) for t in trans) + ((dead,) * n,)
    return DFA(n, delta, 0, frozenset(acc))


def ext_dfa(t: Word, n: int) -> DFA:
    """DFA for {s : t is a prefix of s}."""
    k = len(t)
    dead = k + 1
    rows = []
    for i in range(k):
        rows.append(tuple(i + 1 if a == t[i] else dead for a in range(n)))
    rows.append((k,) * n)
    rows.append((dead,) * n)
    return DFA(n, tuple(rows), 0, frozenset({k}))


def epsilon_dfa(n: int) -> DFA:
    return trie_dfa([()], n)


def empty_dfa(n: int) -> DFA:
    return DFA(n, ((0,) * n,), 0, frozenset())


def minimize(d: DFA) -> DFA:
    """Moore partition refinement on the reachable part."""
    reach = sorted(d.reachable())
    block = {q: (1 if q in d.accepting else 0) for q in reach}
    while True:
        sig = {q: (block[q],) + tuple(block[d.delta[q][a]] for a in range(d.n)) for q in reach}
        ids: Dict[tuple, int] = {}
        new = {}
        for q in reach:
            new[q] = ids.setdefault(sig[q], len(ids))
        if len(ids) == len(set(block.values())):
            block = new
            break
        block = new
    # renumber so the start state is 0 and numbering follows BFS order
    order: List[int] = []
    seen = {}
    todo = deque([block[d.start]])
    rep = {}
    for q in reach:
        rep.setdefault(block[q], q)
    seen[block[d.start]] = 0
    while todo:
        b = todo.popleft()
        order.append(b)
        for a in range(d.n):
            c = block[d.delta[rep[b]][a]]
            if c not in seen:
                seen[c] = len(seen)
                todo.append(c)
    delta = tuple(tuple(seen[block[d.delta[rep[b]][a]]] for a in range(d.n)) for b in order)
    acc = frozenset(seen[b] for b in order if rep[b] in d.accepting)
    return DFA(d.n, delta, 0, acc)


def included_words(d1: DFA, d2: DFA) -> bool:
    """Word-level inclusion L(d1) <= L(d2)."""
    return product(d1, d2, "diff").is_empty()
