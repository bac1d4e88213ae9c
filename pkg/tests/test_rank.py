import json

import pytest
from hypothesis import given, settings, strategies as st

from omegapower.dictionary import Diff, Dictionary, Finite
from omegapower.engine import certify_equal, member_lasso
from omegapower.rank import (
    Member,
    Rank,
    a_p_dictionary,
    alpha_p,
    e_level,
    member_positions,
    position_graph,
    rank_lasso,
    rank_summary,
)
from omegapower.streams import Lasso, lasso_shift, lassos_total
from omegapower.words import parse_word

W = parse_word
L = Lasso.parse


def F(*words):
    return Dictionary.finite([W(w) for w in words])


POOL = [(0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1), (0, 0, 1), (1, 0, 0), (0, 1, 1)]
small_finite = st.lists(st.sampled_from(POOL), min_size=1, max_size=3, unique=True).map(Dictionary.finite)
small_lassos = st.sampled_from(lassos_total(2, 6))


def test_position_graph_examples():
    assert position_graph(F("0"), L("(0)")).edges == ({0: W("0")},)
    assert position_graph(F("0"), L("1(0)")).edges[0] == {}
    g = position_graph(a_p_dictionary(2), alpha_p(2))
    # 00 is the only member along 000 1^oo, and it leads to a dead end
    assert set(g.reachable(0)) == {0, 2}
    assert g.edges[2] == {}


@pytest.mark.parametrize(
    "d,alpha,expected",
    [
        (a_p_dictionary(2), "000(1)", Rank(2)),
        (F("e"), "(01)", Rank(1)),
        (F("0", "1"), "1(0)", Member()),
        (F("0"), "1(0)", Rank(1)),
    ],
)
def test_rank_lasso(d, alpha, expected):
    assert rank_lasso(d, L(alpha)) == expected


@pytest.mark.parametrize("p", range(1, 7))
def test_a_p_family(p):
    assert alpha_p(p) == Lasso.of((0,) * (2 * p - 1), (1,))
    assert rank_lasso(a_p_dictionary(p), alpha_p(p)) == Rank(p)


def test_equal_powers_with_different_ranks():
    a = a_p_dictionary(2)
    b = Dictionary(Diff(a.expr, Finite([W("00")])))
    assert certify_equal(a, b) is True
    assert rank_lasso(a, alpha_p(2)) == Rank(2)
    assert rank_lasso(b, alpha_p(2)) == Rank(1)


@pytest.mark.parametrize(
    "d,alpha,k,expected",
    [
        (F("e"), "(0)", 0, True),
        (a_p_dictionary(2), "000(1)", 1, True),
        (a_p_dictionary(2), "000(1)", 0, False),
        (F("0", "1"), "(01)", 3, False),
    ],
)
def test_e_level(d, alpha, k, expected):
    assert e_level(d, L(alpha), k) is expected


@pytest.mark.parametrize(
    "words,kind", [(("0", "1"), "Zero"), (("e",), "One"), (("0",), "Omega"), (("0", "01", "11", "111"), "FiniteClopen")]
)
def test_rank_summary(words, kind):
    s = rank_summary(F(*words))
    assert s.kind == kind
    if kind == "FiniteClopen":
        assert s.lower_bound >= 1 and s.witness is not None
        assert rank_lasso(F(*words), s.witness) == Rank(s.lower_bound)


def test_rank_json():
    assert json.dumps(Rank(3).to_json(), sort_keys=True) == '{"result": "rank", "value": 3}'
    assert Member().to_json() == {"result": "member"}


@settings(max_examples=150, deadline=None)
@given(small_finite, small_lassos)
def test_rank_agrees_with_membership(d, alpha):
    r = rank_lasso(d, alpha)
    assert isinstance(r, Member) == member_lasso(d, alpha) == member_positions(d, alpha)


@settings(max_examples=150, deadline=None)
@given(small_finite, small_lassos)
def test_rank_drops_along_edges(d, alpha):
    r = rank_lasso(d, alpha)
    if isinstance(r, Member):
        return
    for word in position_graph(d, alpha).edges[0].values():
        shifted = rank_lasso(d, lasso_shift(alpha, len(word)))
        assert isinstance(shifted, Rank) and shifted.value < r.value
    for k in range(7):
        assert (r.value <= k + 1) == e_level(d, alpha, k)
