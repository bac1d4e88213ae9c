"""Is A^oo generated by at most p words?  Decisions for p <= 2, search beyond."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

from .dictionary import Dictionary
from .engine import equivalent, topo_class
from .rank import RankSummary, rank_summary
from .words import EMPTY, Word, format_word, is_power_of, primitive_root, shortlex_key


def _members(d) -> Tuple[Word, ...]:
    if isinstance(d, Dictionary):
        return tuple(w for w in d.require_finite() if w)
    return tuple(sorted({tuple(w) for w in d if len(w) > 0}, key=shortlex_key))


def _n(d) -> int:
    return d.n if isinstance(d, Dictionary) else 2


def _as_dict(d) -> Dictionary:
    return d if isinstance(d, Dictionary) else Dictionary.finite(d)


def g1(d) -> Tuple[bool, Optional[Word]]:
    """One-word generation.

    With no nonempty member the power is empty, like the power of {e}, and the
    witness is the empty word. Otherwise the answer is yes iff every member
    is a power of the primitive root of the shortest member, which is then
    returned as witness.
    """
    words = _members(d)
    if not words:
        return True, EMPTY
    shortest = words[0]
    root = primitive_root(shortest)
    if all(is_power_of(w, root) for w in words):
        return True, shortest
    return False, None


def prefix_candidates(d) -> List[Word]:
    """Nonempty prefixes of members, shortlex order."""
    out = {w[:k] for w in _members(d) for k in range(1, len(w) + 1)}
    return sorted(out, key=shortlex_key)


def _pair_key(pair: Tuple[Word, Word]):
    s1, s2 = pair
    return (len(s1) + len(s2), shortlex_key(s1), shortlex_key(s2))


def g2(d) -> Tuple[bool, Optional[Tuple[Word, Word]]]:
    """Two-word generation, with the least witness pair.

    Candidates are pairs of distinct nonempty prefixes of members, tried by
    total length and then shortlex. When two non-commuting words generate
    A^oo, every member factors over them and both words begin some member,
    so restricting to prefixes loses nothing.
    """
    ok, w = g1(d)
    if ok:
        return True, (w, w)
    A = _as_dict(d)
    cands = prefix_candidates(d)
    pairs = sorted(combinations(cands, 2), key=_pair_key)
    for s1, s2 in pairs:
        if equivalent(A, Dictionary.finite([s1, s2], A.n)):
            return True, (s1, s2)
    return False, None


@dataclass(frozen=True)
class SearchResult:
    found: bool
    witness: Optional[Tuple[Word, ...]]
    conclusive: bool

    def to_json(self) -> dict:
        return {
            "found": self.found,
            "witness": None if self.witness is None else [format_word(w) for w in self.witness],
            "conclusive": self.conclusive,
        }


def g_search(d, p: int) -> SearchResult:
    """Look for p prefixes of members generating A^oo.

    A negative answer settles the question for p <= 2 only; for larger p the
    prefix restriction has no proof behind it, so it is reported as
    inconclusive.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    ok, w = g1(d)
    if ok:
        return SearchResult(True, (w,), True)
    if p == 1:
        return SearchResult(False, None, True)
    A = _as_dict(d)
    cands = prefix_candidates(d)
    for size in range(2, p + 1):
        tuples = sorted(
            combinations(cands, size),
            key=lambda t: (sum(len(x) for x in t), [shortlex_key(x) for x in t]),
        )
        for t in tuples:
            if equivalent(A, Dictionary.finite(t, A.n)):
                return SearchResult(True, t, True)
    return SearchResult(False, None, p <= 2)


@dataclass
class GClassReport:
    g0: bool
    g1: bool
    g1_witness: Optional[Word]
    g2: bool
    g2_witness: Optional[Tuple[Word, Word]]
    searched_p: int = 2
    search: Optional[SearchResult] = None
    topo: str = ""
    rank: Optional[RankSummary] = None

    def to_json(self) -> dict:
        out = {
            "g0": self.g0,
            "g1": self.g1,
            "g1_witness": None if self.g1_witness is None else format_word(self.g1_witness),
            "g2": self.g2,
            "g2_witness": None if self.g2_witness is None else [format_word(w) for w in self.g2_witness],
            "searched_p": self.searched_p,
            "class": self.topo,
        }
        if self.search is not None:
            out["search"] = self.search.to_json()
        if self.rank is not None:
            out["rank"] = self.rank.to_json()
        return out


def classify_report(d, max_p: int = 2, with_rank: bool = True) -> GClassReport:
    A = _as_dict(d)
    g0 = not _members(A)
    ok1, w1 = g1(A)
    ok2, w2 = g2(A)
    search = g_search(A, max_p) if max_p > 2 and not ok2 else None
    return GClassReport(
        g0=g0,
        g1=ok1,
        g1_witness=w1,
        g2=ok2,
        g2_witness=w2,
        searched_p=max(max_p, 2),
        search=search,
        topo=topo_class(A),
        rank=rank_summary(A) if with_rank else None,
    )
