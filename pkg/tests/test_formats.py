import pytest

from omegapower.formats import (
    FormatError,
    dump_finite_dictionary,
    format_tree,
    load_dictionary,
    load_tree,
    parse_dictionary_text,
    parse_regex,
    parse_tree_text,
)
from omegapower.dictionary import Dictionary
from omegapower.words import parse_word

W = parse_word


def test_full_grammar(tmp_path):
    text = """
    alphabet 2
    # two finite sets
    A0 = { 010, 011 }
    A1 = ext(11)
    S  = star(A0)
    D  = A1 \\ S
    R  = re(1 0* 1 1 1*)
    main = D | R
    """
    d, named = parse_dictionary_text(text)
    assert set(named) >= {"A0", "A1", "S", "D", "R", "main"}
    assert d.contains(W("110")) and d.contains(W("10111"))
    assert not d.contains(W("010011"))
    path = tmp_path / "x.dict"
    path.write_text(text)
    assert load_dictionary(path).contains(W("110"))


@pytest.mark.parametrize(
    "text",
    ["main = { 012 }", "main = { 0 } |", "main = B", "main = ext(", "alphabet 1\nmain = {0}", "main = re((0)", "# nothing"],
)
def test_malformed_dictionary(text):
    with pytest.raises(FormatError):
        parse_dictionary_text(text)


@pytest.mark.parametrize("regex,word,expected", [("0* 1", "0001", True), ("(01)+", "e", False), (". 1?", "0", True)])
def test_regex(regex, word, expected):
    assert Dictionary(parse_regex(regex)).contains(W(word)) is expected


def test_dump_round_trip():
    words = [W("0"), W("01"), W("e")]
    d, _ = parse_dictionary_text(dump_finite_dictionary(words))
    assert set(d.words) == set(words)


def test_tree_files(tmp_path):
    t = parse_tree_text("()\n0\n0,2\n")
    assert t == frozenset({(), (0,), (0, 2)})
    assert parse_tree_text(format_tree(t)) == t
    path = tmp_path / "t.tree"
    path.write_text("()\n1\n")
    assert load_tree(path) == frozenset({(), (1,)})


def test_tree_must_be_prefix_closed():
    with pytest.raises(FormatError):
        parse_tree_text("()\n0,1\n")


def test_last_definition_is_main_by_default():
    d, _ = parse_dictionary_text("A = { 0 }\nB = { 1 }")
    assert d.contains(W("1")) and not d.contains(W("0"))
