"""Built-in regression corpus of dictionaries with known infinite powers.

Each entry bundles a dictionary with executable expectations. ``source`` is
``"stated"`` for facts asserted in the literature on these examples and
``"computed"`` for values first produced by the brute-force oracles and then
frozen here.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence

from .dictionary import (
    Diff,
    Dictionary,
    Ext,
    Finite,
    Star,
    Union,
    decomposes,
    half_ones_dictionary,
)
from .engine import certify_equal, included, member_lasso, topo_class
from .formats import parse_regex
from .rank import Rank, a_p_dictionary, alpha_p, rank_lasso
from .streams import Lasso, lassos_total
from .words import Word, parse_word

SAMPLE_SIZE = 6  # closed forms are compared on every lasso with |head| + |cycle| <= this


@dataclass(frozen=True)
class Check:
    description: str
    run: Callable[[], bool]
    source: str  # "stated" | "computed"


@dataclass
class CorpusEntry:
    name: str
    summary: str
    dictionary: object  # Dictionary | OracleDictionary
    checks: List[Check] = field(default_factory=list)

    def membership(self, lasso: str, expected: bool, source: str) -> "CorpusEntry":
        alpha = Lasso.parse(lasso)
        verb = "in" if expected else "not in"
        d = self.dictionary
        self.checks.append(Check(f"{alpha} {verb} A^oo", lambda: member_lasso(d, alpha) == expected, source))
        return self

    def add(self, description: str, run: Callable[[], bool], source: str) -> "CorpusEntry":
        self.checks.append(Check(description, run, source))
        return self


@dataclass(frozen=True)
class CheckResult:
    entry: str
    description: str
    source: str
    ok: bool
    error: Optional[str] = None


def W(text: str) -> Word:
    return parse_word(text)


def _fin(*words: str) -> Finite:
    return Finite([W(w) for w in words])


def _agrees_on_lassos(d: Dictionary, predicate: Callable[[Lasso], bool], size: int = SAMPLE_SIZE) -> Callable[[], bool]:
    def run() -> bool:
        return all(member_lasso(d, a) == predicate(a) for a in lassos_total(d.n, size))

    return run


def _prefix_is(alpha: Lasso, w: Word) -> bool:
    return alpha.prefix(len(w)) == w


def _ext_prefix(alpha: Lasso, words: Sequence[Word]) -> bool:
    return any(_prefix_is(alpha, w) for w in words)


def _eventually_zero(alpha: Lasso) -> bool:
    return alpha.cycle == (0,)


def _infinitely_many_11(alpha: Lasso) -> bool:
    return (1, 1) in {(alpha.cycle + alpha.cycle)[i : i + 2] for i in range(len(alpha.cycle))}


# -- entries ---------------------------------------------------------------


def clopen_example() -> CorpusEntry:
    d = Dictionary(Union((Ext(W("0")), Ext(W("11")))), 2, "clopen")
    e = CorpusEntry("clopen", "ext(0) | ext(11): power is N_0 u N_11", d)
    e.membership("(0)", True, "stated").membership("(1)", True, "stated")
    e.membership("1(0)", False, "stated").membership("(10)", False, "computed")
    e.add(
        "power equals N_0 u N_11 on small lassos",
        _agrees_on_lassos(d, lambda a: _ext_prefix(a, [W("0"), W("11")])),
        "stated",
    )
    return e


def open_example() -> CorpusEntry:
    d = Dictionary(Union((Ext(W("0")), parse_regex("1 0* 1 1*"))), 2, "open")
    ten = Lasso.parse("1(0)")
    e = CorpusEntry("open", "ext(0) | 1 0* 1 1*: power is everything but 1 0^oo", d)
    e.membership("1(0)", False, "stated").membership("(1)", True, "stated")
    e.membership("(0)", True, "stated").membership("1(01)", True, "stated")
    e.add("power is the complement of {1 0^oo} on small lassos", _agrees_on_lassos(d, lambda a: a != ten), "stated")
    e.add("rank of 1 0^oo is 1", lambda: rank_lasso(d, ten) == Rank(1), "stated")
    return e


def sigma_plus_pi_example() -> CorpusEntry:
    d = Dictionary(
        Union((Ext(W("001")), _fin("00"), parse_regex("1 0* 1 (0|1)*"))),
        2,
        "open-plus-closed",
    )
    ten = Lasso.parse("1(0)")

    def closed_form(a: Lasso) -> bool:
        if a == Lasso.parse("(0)"):
            return True
        if a.letter(0) == 1:
            return a != ten
        zeros = 0
        while a.letter(zeros) == 0:
            zeros += 1
        return zeros >= 2 and zeros % 2 == 0

    e = CorpusEntry("open-plus-closed", "ext(001) | {00} | 1 0* 1 ...: open part plus a closed point", d)
    e.membership("(0)", True, "stated").membership("1(0)", False, "stated")
    e.membership("0011(0)", True, "stated").membership("0(1)", False, "computed")
    e.membership("0001(0)", False, "computed")
    e.add("closed form {0^oo} u N_(0^(2q+2)1) u (N_1 minus 1 0^oo) on small lassos", _agrees_on_lassos(d, closed_form), "stated")
    return e


def co_d2_example() -> CorpusEntry:
    d = Dictionary(Union((Ext(W("0")), parse_regex("(101)* 111 (0|1)*"), _fin("100"))), 2, "co-d2")
    hundred = Lasso.parse("(100)")

    def closed_form(a: Lasso) -> bool:
        if a == hundred:
            return True
        pos = 0
        while True:
            rest = a.shift(pos)
            if rest.letter(0) == 0:
                return True
            q = 0
            while rest.prefix(3 * q + 3)[3 * q :] == W("101"):
                q += 1
                if q > 3 * rest.num_classes:
                    break
            if rest.prefix(3 * q + 3)[3 * q :] == W("111"):
                return True
            if rest.prefix(3) != W("100"):
                return False
            pos += 3

    e = CorpusEntry("co-d2", "ext(0) | (101)* 111 ... | {100}", d)
    e.membership("(100)", True, "stated")
    for p in range(4):
        e.membership("100" * p + "(110)", False, "stated")
    e.add("closed form on small lassos", _agrees_on_lassos(d, closed_form), "stated")
    return e


D2_A0 = ("010", "011")
D2_A1 = ("010", "011", "00", "000", "100", "110", "1000", "1100")


def d2_example() -> CorpusEntry:
    a0, a1 = _fin(*D2_A0), _fin(*D2_A1)
    d = Dictionary(Diff(Star(a1), Star(a0)), 2, "d2")
    A0, A1 = Dictionary(a0), Dictionary(a1)
    e = CorpusEntry("d2", "star(A1) minus star(A0): power is A1^oo minus A0^oo", d)
    e.membership("(011)", False, "stated")
    for p in range(1, 5):
        e.membership("011" * p + "(0)", True, "stated")
    e.add(
        "power equals A1^oo minus A0^oo on small lassos",
        _agrees_on_lassos(d, lambda a: member_lasso(A1, a) and not member_lasso(A0, a)),
        "stated",
    )
    e.add("A1^oo and A0^oo are closed", lambda: topo_class(A1) == topo_class(A0) == "ClosedNotOpen", "computed")
    return e


def co_d3_example() -> CorpusEntry:
    a0, a1, a2 = _fin("00"), _fin("00", "01"), _fin("00", "01", "10", "100")
    d = Dictionary(Union((Diff(Star(a2), Star(a1)), Star(a0))), 2, "co-d3")
    A0, A1, A2 = Dictionary(a0), Dictionary(a1), Dictionary(a2)
    e = CorpusEntry("co-d3", "(star(A2) minus star(A1)) | star(A0)", d)
    e.add(
        "power equals (A2^oo minus A1^oo) u A0^oo on small lassos",
        _agrees_on_lassos(
            d, lambda a: (member_lasso(A2, a) and not member_lasso(A1, a)) or member_lasso(A0, a)
        ),
        "stated",
    )
    e.membership("(0)", True, "stated").membership("(01)", False, "computed")
    e.membership("0(01)", True, "computed").membership("(10)", True, "computed")
    e.membership("(1)", False, "stated")
    return e


def co_d2_sigma2_example() -> CorpusEntry:
    d = Dictionary(Union((Ext(W("11")), _fin("0"))), 2, "co-d2-sigma2")

    def closed_form(a: Lasso) -> bool:
        zeros = 0
        while zeros <= a.num_classes and a.letter(zeros) == 0:
            zeros += 1
        first = a == Lasso.parse("(0)") or a.prefix(zeros + 2)[zeros:] == W("11")
        return first and (_eventually_zero(a) or _infinitely_many_11(a))

    e = CorpusEntry("co-d2-sigma2", "ext(11) | {0}", d)
    e.membership("(0)", True, "stated").membership("11(0)", True, "stated")
    e.membership("(011)", True, "stated").membership("(01)", False, "stated")
    e.membership("11(01)", False, "stated")
    e.add("closed form on small lassos", _agrees_on_lassos(d, closed_form), "stated")
    return e


HALF_ONES_PREFIX = "10" + "1100" + "111000" + "11110000"


def half_ones_example() -> CorpusEntry:
    d = half_ones_dictionary()
    e = CorpusEntry("half-ones", "words whose every prefix is at least half ones (oracle)", d)
    for w, expected in (("1", True), ("10", True), ("1100", True), ("e", True), ("0", False), ("100", False)):
        e.add(f"{w} {'in' if expected else 'not in'} A", (lambda w=w, x=expected: d.contains(W(w)) == x), "computed")
    e.add(
        f"{HALF_ONES_PREFIX} factorizes into members",
        lambda: decomposes(d, W(HALF_ONES_PREFIX)),
        "stated",
    )
    e.add(
        f"{HALF_ONES_PREFIX} has no factorization into members of length <= 6",
        lambda: not decomposes(d, W(HALF_ONES_PREFIX), max_len=6),
        "stated",
    )
    return e


def a_p_family() -> List[CorpusEntry]:
    out = []
    for p in range(1, 7):
        d = a_p_dictionary(p)
        prefixes = [(0,) * (2 * q) + (1,) for q in range(p + 1)] + [(0,) * (2 * p + 1)]
        e = CorpusEntry(f"A_{p}", f"rank family member p={p}", d)
        e.add(f"rank at {alpha_p(p)} is {p}", (lambda d=d, p=p: rank_lasso(d, alpha_p(p)) == Rank(p)), "stated")
        e.add(
            "power is a finite union of basic open sets on small lassos",
            _agrees_on_lassos(d, lambda a, pre=prefixes: _ext_prefix(a, pre)),
            "stated",
        )
        out.append(e)
    a2 = a_p_dictionary(2)
    b = Dictionary(Diff(a2.expr, _fin("00")), 2, "A_2 minus {00}")
    e = CorpusEntry("A_2-minus-00", "same power as A_2, smaller rank", b)
    e.add("power equals that of A_2", lambda: certify_equal(a2, b) is True, "stated")
    e.add("rank at 000(1) is 1 (A_2 gives 2)", lambda: rank_lasso(b, alpha_p(2)) == Rank(1), "stated")
    out.append(e)
    return out


def inclusion_pair() -> CorpusEntry:
    a = Dictionary.finite([W("01"), W("0")], 2, "{01, 0}")
    b = Dictionary.finite([W("0"), W("10")], 2, "{0, 10}")
    e = CorpusEntry("inclusion-pair", "{01, 0}^oo is strictly inside {0, 10}^oo", a)
    e.add("{01,0}^oo <= {0,10}^oo", lambda: included(a, b), "stated")
    e.add("{0,10}^oo not <= {01,0}^oo", lambda: not included(b, a), "computed")
    e.membership("(01)", True, "computed").membership("(0)", True, "computed")
    return e


def finite_clopen() -> CorpusEntry:
    d = Dictionary.finite([W("0"), W("01"), W("11"), W("111")], 2, "{0, 01, 11, 111}")
    e = CorpusEntry("finite-clopen", "{0, 01, 11, 111}: a finite dictionary whose power is N_0 u N_11", d)
    e.add("class Clopen", lambda: topo_class(d) == "Clopen", "computed")
    e.add(
        "power equals N_0 u N_11 on small lassos",
        _agrees_on_lassos(d, lambda a: _ext_prefix(a, [W("0"), W("11")])),
        "computed",
    )
    e.membership("10(1)", False, "computed")
    return e


def small_cases() -> List[CorpusEntry]:
    full = Dictionary.finite([W("0"), W("1")], 2, "{0, 1}")
    zero = Dictionary.finite([W("0")], 2, "{0}")
    empty = Dictionary.finite([()], 2, "{e}")
    out = [
        CorpusEntry("letters", "{0, 1}: every infinite word", full)
        .add("class Full", lambda: topo_class(full) == "Full", "stated")
        .membership("(01)", True, "stated"),
        CorpusEntry("zero", "{0}: the single point 0^oo", zero)
        .add("class ClosedNotOpen", lambda: topo_class(zero) == "ClosedNotOpen", "stated")
        .membership("(0)", True, "stated")
        .membership("1(0)", False, "stated"),
        CorpusEntry("empty-word", "{e}: empty power", empty)
        .add("class Empty", lambda: topo_class(empty) == "Empty", "stated")
        .membership("(0)", False, "stated"),
    ]
    inf_ones = Dictionary(parse_regex("0* 1"), 2, "0*1")
    out.append(
        CorpusEntry("infinitely-many-ones", "0* 1: words with infinitely many 1s", inf_ones).add(
            "power is 'infinitely many 1s' on small lassos",
            _agrees_on_lassos(inf_ones, lambda a: 1 in a.cycle),
            "stated",
        )
    )
    return out


def corpus() -> List[CorpusEntry]:
    entries = [
        clopen_example(),
        open_example(),
        sigma_plus_pi_example(),
        co_d2_example(),
        d2_example(),
        co_d3_example(),
        co_d2_sigma2_example(),
        half_ones_example(),
        *a_p_family(),
        inclusion_pair(),
        finite_clopen(),
        *small_cases(),
    ]
    return sorted(entries, key=lambda e: e.name)


def run_entry(entry: CorpusEntry) -> List[CheckResult]:
    results = []
    for c in entry.checks:
        try:
            ok, err = bool(c.run()), None
        except Exception as exc:  # a crashing check is a failed check
            ok, err = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(entry.name, c.description, c.source, ok, err))
    return results


def run_corpus(entries: Optional[List[CorpusEntry]] = None) -> List[CheckResult]:
    out: List[CheckResult] = []
    for e in entries if entries is not None else corpus():
        out.extend(run_entry(e))
    return out
