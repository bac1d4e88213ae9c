from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from omegapower.dictionary import (
    AllWords,
    Concat,
    Diff,
    Dictionary,
    Ext,
    Finite,
    Letter,
    Star,
    StarWords,
    Union,
    chain_decomposition,
    contains,
    decomposes,
    evaluate,
    half_ones_dictionary,
    is_antichain,
    is_code,
)
from omegapower.words import commutes, is_prefix, parse_word

W = parse_word


def fin(*words):
    return Finite([W(w) for w in words])


def words_upto(k, n=2):
    for size in range(k + 1):
        yield from product(range(n), repeat=size)


A0 = fin("010", "011")
A1 = fin("010", "011", "00", "000", "100", "110", "1000", "1100")


@pytest.mark.parametrize(
    "expr,word,expected",
    [
        (fin("010", "011"), "010", True),
        (fin("010", "011"), "01", False),
        (Ext(W("11")), "11", True),
        (Ext(W("11")), "110", True),
        (Ext(W("11")), "1", False),
        (Diff(StarWords(A1), StarWords(A0)), "010", False),
        (Diff(StarWords(A1), StarWords(A0)), "01000", True),
        (fin("e"), "e", True),
    ],
)
def test_compiled_membership(expr, word, expected):
    assert Dictionary(expr).contains(W(word)) is expected


def test_half_ones_oracle():
    d = half_ones_dictionary()
    assert contains(d, W("1")) and not contains(d, W("0"))
    assert contains(d, ())
    assert decomposes(d, W("1011001110001111000"))


@pytest.mark.parametrize(
    "words,expected", [(("1", "001", "0001"), True), (("0", "01"), False), ((), True)]
)
def test_is_antichain(words, expected):
    assert is_antichain(Dictionary(fin(*words))) is expected


@pytest.mark.parametrize(
    "words,parts",
    [
        (("0", "00", "01"), [["0", "00"], ["01"]]),
        (("0",), [["0"]]),
        (("1", "001"), [["1"], ["001"]]),
    ],
)
def test_chain_decomposition(words, parts):
    assert chain_decomposition(Dictionary(fin(*words))) == [[W(w) for w in p] for p in parts]


@pytest.mark.parametrize("words,expected", [(("0", "01"), True), (("0", "10", "010"), False), (("01", "10"), True)])
def test_is_code(words, expected):
    assert is_code(Dictionary(fin(*words))) is expected


def test_is_code_rejects_empty_word():
    with pytest.raises(ValueError):
        is_code(Dictionary(fin("e", "0")))


def test_non_commuting_pairs_are_codes():
    pool = [w for w in words_upto(5) if w]
    for s1, s2 in combinations(pool, 2):
        if not commutes(s1, s2):
            assert is_code(Dictionary(Finite([s1, s2])))


def test_alphabet_bounds():
    with pytest.raises(ValueError):
        Dictionary(fin("0"), n=1)
    with pytest.raises(ValueError):
        Dictionary.finite([(3,)], n=2)


# -- compiled automaton against direct evaluation ---------------------------

short_words = st.lists(st.integers(0, 1), max_size=3).map(tuple)
leaves = st.one_of(
    st.lists(short_words, max_size=3).map(Finite),
    short_words.map(Ext),
    st.integers(0, 1).map(Letter),
    st.just(AllWords()),
)
exprs = st.recursive(
    leaves,
    lambda inner: st.one_of(
        st.tuples(inner, inner).map(Concat),
        st.tuples(inner, inner).map(Union),
        inner.map(Star),
        inner.map(StarWords),
        st.tuples(inner, inner).map(lambda p: Diff(*p)),
    ),
    max_leaves=5,
)


@settings(max_examples=60, deadline=None)
@given(exprs)
def test_compile_agrees_with_evaluation(expr):
    d = Dictionary(expr)
    for w in words_upto(6):
        assert d.contains(w) == evaluate(expr, w, 2)


@given(st.lists(st.lists(st.integers(0, 1), min_size=1, max_size=4).map(tuple), max_size=6))
def test_chain_parts_are_chains(words):
    d = Dictionary(Finite(words))
    parts = chain_decomposition(d)
    flat = [w for p in parts for w in p]
    assert sorted(flat) == sorted(set(words))
    for p in parts:
        for a, b in combinations(p, 2):
            assert is_prefix(a, b) or is_prefix(b, a)
    if is_antichain(d):
        assert all(len(p) == 1 for p in parts)
