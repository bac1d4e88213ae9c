"""Ranks of decomposition trees on lassos.

The decomposition tree of alpha collects the finite sequences of nonempty
members whose concatenation is a prefix of alpha. On a lasso, subtrees only
depend on the position class of the cut, so the tree collapses onto a finite
graph over position classes. The tree is well founded iff no cycle of that
graph is reachable from class 0, and its rank is then computed on the graph.
"""
from __future__ import annotations

from dataclasses import dataclass
import typing
from typing import Dict, FrozenSet, List, Optional, Tuple

from .dictionary import Dictionary
from .engine import topo_class
from .streams import Lasso, lassos_total
from .words import Word


@dataclass(frozen=True)
class PositionGraph:
    """Edges between position classes of a lasso.

    ``edges[c]`` maps each target class to the shortest member matched from
    class c that lands there.
    """

    alpha: Lasso
    edges: Tuple[Dict[int, Word], ...]

    @property
    def num_classes(self) -> int:
        return len(self.edges)

    def successors(self, c: int) -> FrozenSet[int]:
        return frozenset(self.edges[c])

    def reachable(self, src: int = 0) -> FrozenSet[int]:
        seen = {src}
        todo = [src]
        while todo:
            c = todo.pop()
            for d in self.edges[c]:
                if d not in seen:
                    seen.add(d)
                    todo.append(d)
        return frozenset(seen)


def position_graph(d: Dictionary, alpha: Lasso) -> PositionGraph:
    """Run the member automaton from every class until its (state, class) pair repeats."""
    dfa = d.nonempty_dfa
    useful = dfa.coreachable()
    edges: List[Dict[int, Word]] = []
    for c in range(alpha.num_classes):
        out: Dict[int, Word] = {}
        q, pos = dfa.start, c
        seen = set()
        while q in useful and (q, alpha.position_class(pos)) not in seen:
            seen.add((q, alpha.position_class(pos)))
            q = dfa.delta[q][alpha.letter(pos)]
            pos += 1
            if q in dfa.accepting:
                target = alpha.position_class(pos)
                if target not in out:
                    out[target] = alpha.prefix(pos)[c:]
        edges.append(out)
    return PositionGraph(alpha, tuple(edges))


@dataclass(frozen=True)
class Member:
    """alpha belongs to A^oo; its decomposition tree has an infinite branch."""

    def to_json(self) -> dict:
        return {"result": "member"}

    def __str__(self) -> str:
        return "member"


@dataclass(frozen=True)
class Rank:
    value: int

    def to_json(self) -> dict:
        return {"result": "rank", "value": self.value}

    def __str__(self) -> str:
        return f"rank {self.value}"


RankResult = typing.Union[Member, Rank]


def _heights(g: PositionGraph) -> Optional[Dict[int, int]]:
    """Height of every class reachable from 0, or None if a cycle is reachable."""
    heights: Dict[int, int] = {}
    on_stack = set()
    stack = [(0, iter(sorted(g.edges[0])))]
    on_stack.add(0)
    while stack:
        c, it = stack[-1]
        advanced = False
        for d in it:
            if d in on_stack:
                return None
            if d not in heights:
                on_stack.add(d)
                stack.append((d, iter(sorted(g.edges[d]))))
                advanced = True
                break
        if not advanced:
            stack.pop()
            on_stack.discard(c)
            heights[c] = max((heights[d] + 1 for d in g.edges[c]), default=0)
    return heights


def rank_lasso(d: Dictionary, alpha: Lasso):
    """Member, or Rank(r) with r the rank of the (well founded) decomposition tree."""
    h = _heights(position_graph(d, alpha))
    if h is None:
        return Member()
    return Rank(h[0] + 1)


def member_positions(d: Dictionary, alpha: Lasso) -> bool:
    """Membership through cycle reachability in the position graph."""
    g = position_graph(d, alpha)
    return _heights(g) is None


def e_level(d: Dictionary, alpha: Lasso, k: int) -> bool:
    """Is alpha in E_k?  E_0: no member prefixes alpha; E_{k+1}: every match leads into E_k."""
    if k < 0:
        raise ValueError("level must be nonnegative")
    g = position_graph(d, alpha)
    level = [not g.edges[c] for c in range(g.num_classes)]
    for _ in range(k):
        level = [all(level[t] for t in g.edges[c]) for c in range(g.num_classes)]
    return level[0]


@dataclass(frozen=True)
class RankSummary:
    """Category of R(A) for a finite dictionary; ``lower_bound`` only for the clopen case."""

    kind: str  # "Zero" | "One" | "FiniteClopen" | "Omega"
    lower_bound: Optional[int] = None
    witness: Optional[Lasso] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "FiniteClopen":
            out["lower_bound"] = self.lower_bound
            out["witness"] = str(self.witness)
        return out

    def __str__(self) -> str:
        if self.kind == "FiniteClopen":
            return f"finite, at least {self.lower_bound} (witness {self.witness})"
        return {"Zero": "0", "One": "1", "Omega": "omega"}[self.kind]


def rank_summary(d: Dictionary, budget: int = 8) -> RankSummary:
    """R(A) for a finite dictionary, from its topological class.

    Full gives 0, empty gives 1, closed-not-open gives omega. For the
    remaining clopen case only a lower bound is certified: the largest rank
    among lassos with |head| + |cycle| <= budget.
    """
    cls = topo_class(d)
    if cls == "Full":
        return RankSummary("Zero")
    if cls == "Empty":
        return RankSummary("One")
    if cls == "ClosedNotOpen":
        return RankSummary("Omega")
    best, witness = 0, None
    for alpha in lassos_total(d.n, budget):
        r = rank_lasso(d, alpha)
        if isinstance(r, Rank) and r.value > best:
            best, witness = r.value, alpha
    return RankSummary("FiniteClopen", best, witness)


def a_p_dictionary(p: int) -> Dictionary:
    """{00} with every extension of 0^(2q) 1 for q <= p and of 0^(2p+1)."""
    from .dictionary import Ext, Finite, Union

    if p < 1:
        raise ValueError("p must be positive")
    parts = [Finite([(0, 0)])]
    parts += [Ext((0,) * (2 * q) + (1,)) for q in range(p + 1)]
    parts.append(Ext((0,) * (2 * p + 1)))
    return Dictionary(Union(tuple(parts)), 2, name=f"A_{p}")


def alpha_p(p: int) -> Lasso:
    """0^(2p-1) followed by 1 forever."""
    return Lasso.of((0,) * (2 * p - 1), (1,))
