from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from omegapower.classify import classify_report, g1, g2, g_search, prefix_candidates
from omegapower.dictionary import Dictionary
from omegapower.engine import equivalent
from omegapower.words import is_prefix, parse_word

W = parse_word


def F(*words):
    return Dictionary.finite([W(w) for w in words])


POOL = [w for k in range(1, 4) for w in product((0, 1), repeat=k)]
small_finite = st.lists(st.sampled_from(POOL), min_size=1, max_size=3, unique=True).map(Dictionary.finite)


@pytest.mark.parametrize(
    "words,expected",
    [(("00", "0000"), (True, W("00"))), (("0", "111"), (False, None)), ((), (True, ()))],
)
def test_g1(words, expected):
    assert g1(F(*words)) == expected


@pytest.mark.parametrize(
    "words,expected",
    [
        (("0", "01", "001"), (True, (W("0"), W("01")))),
        (("0", "1"), (True, (W("0"), W("1")))),
        (("001", "010", "100"), (False, None)),
        (("00", "0000"), (True, (W("00"), W("00")))),
    ],
)
def test_g2(words, expected):
    assert g2(F(*words)) == expected


def test_g_search():
    hit = g_search(F("0", "01", "001"), 2)
    assert hit.found and equivalent(F("0", "01", "001"), Dictionary.finite(hit.witness))
    assert g_search(F("00", "0000"), 1).found
    miss = g_search(F("001", "010", "100"), 2)
    assert not miss.found and miss.conclusive
    # with three words allowed the dictionary generates itself
    assert g_search(F("001", "010", "100"), 3).found
    assert not g_search(F("0", "1", "0011", "1100"), 1).found


def test_prefix_candidates():
    assert prefix_candidates(F("01", "1")) == [W("0"), W("1"), W("01")]


@pytest.mark.parametrize(
    "words,flag,cls",
    [(("e",), "g0", "Empty"), (("0",), "g1", "ClosedNotOpen"), (("0", "1"), "g2", "Full")],
)
def test_classify_report(words, flag, cls):
    report = classify_report(F(*words))
    assert getattr(report, flag) is True
    assert report.topo == cls
    data = report.to_json()
    assert data["class"] == cls and "rank" in data


@settings(max_examples=100, deadline=None)
@given(small_finite)
def test_report_is_monotone_and_verified(d):
    r = classify_report(d, with_rank=False)
    assert (not r.g0 or r.g1) and (not r.g1 or r.g2)
    if r.g1 and r.g1_witness:
        assert equivalent(d, Dictionary.finite([r.g1_witness]))
    if r.g2:
        assert equivalent(d, Dictionary.finite(r.g2_witness))


@settings(max_examples=100, deadline=None)
@given(small_finite)
def test_g1_against_single_word_search(d):
    longest = max(map(len, d.nonempty_words))
    brute = any(
        equivalent(d, Dictionary.finite([w]))
        for k in range(1, longest + 1)
        for w in product((0, 1), repeat=k)
    )
    assert g1(d)[0] == brute


def test_generators_are_member_prefixes():
    for words in combinations(POOL, 3):
        d = Dictionary.finite(words)
        ok, pair = g2(d)
        if ok and not g1(d)[0]:
            for s in pair:
                assert any(is_prefix(s, w) for w in words)
