from math import lcm

import pytest
from hypothesis import given, strategies as st

from omegapower.streams import Lasso, alpha0, alpha0_prefix_through_run, lasso_normalize, lasso_shift, lassos_upto
from omegapower.words import parse_word

W = parse_word
heads = st.lists(st.integers(0, 1), max_size=5).map(tuple)
cycles = st.lists(st.integers(0, 1), min_size=1, max_size=5).map(tuple)


def same_word(a, b):
    """Prefix oracle: two lassos denote the same infinite word iff they agree this far."""
    (u, v), (u2, v2) = a, b
    k = len(u) + len(u2) + 2 * lcm(len(v), len(v2))
    return Lasso(u, v).prefix(k) == Lasso(u2, v2).prefix(k)


def test_normalize_shortens_head():
    # 010(10)^oo = (01)^oo, so the head vanishes entirely.
    a = lasso_normalize(W("010"), W("10"))
    assert a == lasso_normalize(W("0"), W("10")) == Lasso((), W("01"))
    assert same_word((W("010"), W("10")), (a.head, a.cycle))


@pytest.mark.parametrize("u,v,head,cycle", [("e", "0101", "e", "01"), ("e", "0", "e", "0"), ("10", "0", "1", "0")])
def test_normalize_examples(u, v, head, cycle):
    assert lasso_normalize(W(u), W(v)) == Lasso(W(head), W(cycle))


def test_normalize_rejects_empty_cycle():
    with pytest.raises(ValueError):
        lasso_normalize(W("0"), ())


@pytest.mark.parametrize("alpha,k,expected", [("(01)", 1, "(10)"), ("0(1)", 0, "0(1)"), ("1(0)", 5, "(0)")])
def test_shift(alpha, k, expected):
    assert lasso_shift(Lasso.parse(alpha), k) == Lasso.parse(expected)


@pytest.mark.parametrize("text", ["(1)", "1(0)", "01(110)"])
def test_lasso_literal_round_trip(text):
    assert str(Lasso.parse(text)) == text


@pytest.mark.parametrize("k,prefix", [(2, "10"), (5, "10100"), (9, "101001000")])
def test_alpha0_prefix(k, prefix):
    assert alpha0().prefix(k) == W(prefix)


def test_alpha0_runs_increase():
    word = alpha0_prefix_through_run(30)
    runs = [len(r) for r in "".join(map(str, word)).split("1")[1:]]
    assert runs == list(range(1, 31))
    assert alpha0().prefix(len(word)) == word


@given(heads, cycles, heads, cycles)
def test_normalize_is_a_congruence(u, v, u2, v2):
    a, b = lasso_normalize(u, v), lasso_normalize(u2, v2)
    assert (a == b) == same_word((u, v), (u2, v2))
    assert lasso_normalize(a.head, a.cycle) == a


@given(heads, cycles, st.integers(0, 8), st.integers(0, 8))
def test_shift_composes(u, v, j, k):
    a = lasso_normalize(u, v)
    assert lasso_shift(a, j + k) == lasso_shift(lasso_shift(a, j), k)
    assert lasso_shift(a, j).prefix(10) == a.prefix(j + 10)[j:]


def test_lassos_upto_is_canonical_and_distinct():
    found = lassos_upto(2, 2, 3)
    assert len(found) == len(set(found)) == 40
    assert all(lasso_normalize(a.head, a.cycle) == a for a in found)
