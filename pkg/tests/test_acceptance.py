"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the per-criterion summary is
printed at the end of the session.
"""
import time
from itertools import combinations, product

import pytest

from omegapower.classify import g1, g2
from omegapower.cli import run
from omegapower.corpus import corpus
from omegapower.dictionary import Dictionary
from omegapower.engine import SafetyAutomaton, equivalent, included, member_by_search, member_lasso, run_safety
from omegapower.engine import build_safety
from omegapower.rank import Member, Rank, a_p_dictionary, alpha_p, e_level, member_positions, rank_lasso, rank_summary
from omegapower.reductions import (
    alpha0_death,
    alpha0_rank,
    alpha0_rank_explicit,
    branch_check,
    death_bound,
    tree_dict,
    tree_rank,
    tree_words_max_length,
    trees_upto,
)
from omegapower.streams import Lasso, alpha0, lassos_upto
from omegapower.words import commutes, incompatible, meet, power, primitive_root, split_point


def words_upto(k, min_len=0):
    return [w for n in range(min_len, k + 1) for w in product((0, 1), repeat=n)]


@pytest.fixture
def report(request):
    """Print and record the one-line outcome of a criterion."""
    start = time.perf_counter()

    def emit(text):
        line = f"{text} ({time.perf_counter() - start:.1f}s)"
        request.node.user_properties.append(("detail", line))
        print(line)

    return emit


# -- shared small family: <= 3 words of length <= 3 (empty word included) ---

POOL_3 = words_upto(3)
SMALL_DICTS = [Dictionary.finite(c) for k in range(4) for c in combinations(POOL_3, k)]
SMALL_LASSOS = lassos_upto(2, 2, 3)


@pytest.fixture(scope="module")
def membership_table():
    table = {}
    for i, d in enumerate(SMALL_DICTS):
        for alpha in SMALL_LASSOS:
            table[i, alpha] = member_lasso(d, alpha)
    return table


def test_criterion_01(report, membership_table):
    bad = []
    for i, d in enumerate(SMALL_DICTS):
        safety = SafetyAutomaton.of(d)
        for alpha in SMALL_LASSOS:
            answers = (
                membership_table[i, alpha],
                member_positions(d, alpha),
                member_by_search(d.nonempty_words, alpha),
                safety.accepts_lasso(alpha),
            )
            if len(set(answers)) != 1:
                bad.append((d.label, str(alpha), answers))
    total = len(SMALL_DICTS) * len(SMALL_LASSOS)
    report(f"membership oracles agree on {total - len(bad)}/{total} (dictionary, lasso) cases")
    assert len(SMALL_LASSOS) == 40 and len(SMALL_DICTS) == 576
    assert not bad, bad[:5]


def test_criterion_02(report):
    words = words_upto(8, 1)
    roots = {w: primitive_root(w) for w in words}
    failures = [(x, y) for x in words for y in words if commutes(x, y) != (roots[x] == roots[y])]
    report(f"commuting iff equal primitive roots on {len(words) ** 2} pairs, {len(failures)} failures")
    assert not failures


def test_criterion_03(report):
    words = words_upto(5, 1)
    failures, checked = [], 0
    for s1 in words:
        for s2 in words:
            if commutes(s1, s2):
                continue
            for q in range(1, 5):
                checked += 1
                left, right = s2 + s1, power(s1, q) + s2
                if not incompatible(left, right) or meet(left, right) != split_point(s1, s2):
                    failures.append((s1, s2, q))
    report(f"split-point identity on {checked} (pair, q) cases, {len(failures)} failures")
    assert not failures


# -- two-word generator family: non-commuting pairs of length <= 4 ----------

PAIR_WORDS = words_upto(4, 1)
PAIRS = [(a, b) for a, b in combinations(PAIR_WORDS, 2) if not commutes(a, b)]


@pytest.fixture(scope="module")
def pair_inclusions():
    """All (S, T) with S^oo <= T^oo.

    A pair is only handed to ``included`` when both s1^oo and s2^oo lie in
    T^oo, which inclusion requires anyway.
    """
    dicts = {p: Dictionary.finite(p) for p in PAIRS}
    powers = {w: Lasso.of((), w) for w in PAIR_WORDS}
    accepts = {p: {w for w in PAIR_WORDS if SafetyAutomaton.of(dicts[p]).accepts_lasso(powers[w])} for p in PAIRS}
    holds = set()
    for s in PAIRS:
        for t in PAIRS:
            if s[0] in accepts[t] and s[1] in accepts[t] and included(dicts[s], dicts[t]):
                holds.add((s, t))
    return dicts, accepts, holds


def test_criterion_04(report, pair_inclusions):
    dicts, accepts, holds = pair_inclusions
    violations = [(s, t) for s, t in holds if len(t[0]) + len(t[1]) > len(s[0]) + len(s[1])]
    # the prefilter only skips pairs that really are not included
    skipped = [(s, t) for s in PAIRS[::9] for t in PAIRS[::7] if not (s[0] in accepts[t] and s[1] in accepts[t])]
    assert not any(included(dicts[s], dicts[t]) for s, t in skipped)
    a, b = ((0, 1), (0,)), ((0,), (1, 0))
    strict = included(Dictionary.finite(a), Dictionary.finite(b)) and not included(
        Dictionary.finite(b), Dictionary.finite(a)
    )
    report(
        f"{len(PAIRS)} pairs, {len(holds)} inclusions, {len(violations)} length violations; "
        f"{{01,0}}^oo strictly inside {{0,10}}^oo: {strict}"
    )
    assert not violations
    assert strict


def test_criterion_05(report, pair_inclusions):
    _, _, holds = pair_inclusions
    equal_powers = [(s, t) for s, t in holds if (t, s) in holds]
    exceptions = [(s, t) for s, t in equal_powers if set(s) != set(t)]
    # confirm with the equivalence decision itself
    assert all(equivalent(Dictionary.finite(s), Dictionary.finite(t)) for s, t in equal_powers)
    report(f"{len(equal_powers)} equivalent generator pairs, {len(exceptions)} with different word sets")
    assert not exceptions


def test_criterion_06(report):
    ranks = {p: rank_lasso(a_p_dictionary(p), alpha_p(p)) for p in range(1, 7)}
    summaries = [rank_summary(Dictionary.finite(w)).kind for w in ([(0,), (1,)], [()], [(0,)])]
    report(f"ranks {[ranks[p].value for p in range(1, 7)]}, summaries {summaries}")
    assert ranks == {p: Rank(p) for p in range(1, 7)}
    assert summaries == ["Zero", "One", "Omega"]


def test_criterion_07(report, membership_table):
    failures, checked = [], 0
    for i, d in enumerate(SMALL_DICTS):
        for alpha in SMALL_LASSOS:
            if membership_table[i, alpha]:
                continue
            r = rank_lasso(d, alpha)
            if isinstance(r, Member):
                failures.append((d.label, str(alpha), "rank says member"))
                continue
            for k in range(7):
                checked += 1
                if (r.value <= k + 1) != e_level(d, alpha, k):
                    failures.append((d.label, str(alpha), k))
    report(f"rank <= k+1 iff level E_k on {checked} (dictionary, lasso, k) triples, {len(failures)} failures")
    assert not failures


EXPLICIT_LIMIT = 3000  # longest code word for which the letter-level run is also executed


def test_criterion_08(report):
    trees = trees_upto(6, 4)
    late, explicit_mismatch, rank_failures, explicit_trees = [], [], [], 0
    for T in trees:
        dead = alpha0_death(T)
        if dead.step > death_bound(T):
            late.append(T)
        if tree_rank(T) > alpha0_rank(T):
            rank_failures.append(T)
        if tree_words_max_length(T) <= EXPLICIT_LIMIT:
            explicit_trees += 1
            run = run_safety(build_safety(tree_dict(T)), alpha0(), death_bound(T))
            if run != dead or alpha0_rank_explicit(T) != alpha0_rank(T):
                explicit_mismatch.append(T)
    branches = {node for T in trees for node in T}
    cuts = [(g, L) for g in branches for L in range(len(g) + 1)]
    bad_branches = [c for c in cuts if not branch_check(*c)]
    report(
        f"{len(trees)} trees: {len(late)} late deaths, {len(rank_failures)} rank failures, "
        f"{len(bad_branches)}/{len(cuts)} failed branch checks, "
        f"letter-level cross-check on {explicit_trees} trees with {len(explicit_mismatch)} mismatches"
    )
    assert len(trees) == 8221
    assert not late and not rank_failures and not bad_branches and not explicit_mismatch


def test_criterion_09(report):
    code, out = run(["examples", "--run"])
    entries = {e.name: {c.description for c in e.checks} for e in corpus()}
    required = {
        "open": "1(0) not in A^oo",
        "co-d2": "(100) in A^oo",
        "d2": "power equals A1^oo minus A0^oo on small lassos",
    }
    present = all(desc in entries[name] for name, desc in required.items())
    report(f"examples --run exit code {code}; {out.strip().splitlines()[-1]}; key facts present: {present}")
    assert code == 0 and present


G_FAMILY = SMALL_DICTS + [Dictionary.finite(c) for c in combinations(POOL_3[1:], 4)]


def test_criterion_10(report):
    failures, negatives, positives = [], 0, 0
    for d in G_FAMILY:
        ok1, w1 = g1(d)
        if ok1 and w1 and not equivalent(d, Dictionary.finite([w1])):
            failures.append((d.label, "g1 witness"))
        ok2, pair = g2(d)
        if ok2:
            positives += 1
            if not equivalent(d, Dictionary.finite(pair)):
                failures.append((d.label, "g2 witness"))
            continue
        negatives += 1
        longest = max(len(w) for w in d.nonempty_words)
        pool = words_upto(longest, 1)
        if any(equivalent(d, Dictionary.finite(p)) for p in combinations(pool, 2)):
            failures.append((d.label, "missed pair"))
    report(
        f"{len(G_FAMILY)} dictionaries: {positives} positive and {negatives} negative two-word answers, "
        f"{len(failures)} failures"
    )
    assert not failures
