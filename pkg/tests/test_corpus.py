import pytest

from omegapower.corpus import corpus, run_corpus, run_entry
from omegapower.engine import member_by_search
from omegapower.streams import Lasso

ENTRIES = corpus()


def test_corpus_size_and_order():
    names = [e.name for e in ENTRIES]
    assert len(names) >= 10
    assert names == sorted(names)
    assert {"clopen", "open", "co-d2", "d2", "co-d3", "half-ones", "inclusion-pair", "A_6"} <= set(names)


def test_every_check_has_a_source():
    for e in ENTRIES:
        assert e.checks
        assert all(c.source in ("stated", "computed") for c in e.checks)


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_entry_passes(entry):
    failures = [r for r in run_entry(entry) if not r.ok]
    assert not failures


def test_hundred_cycle_membership():
    entry = next(e for e in ENTRIES if e.name == "co-d2")
    assert any(c.description == "(100) in A^oo" for c in entry.checks)


def test_finite_membership_facts_match_brute_force():
    entry = next(e for e in ENTRIES if e.name == "inclusion-pair")
    words = entry.dictionary.nonempty_words
    assert member_by_search(words, Lasso.parse("(01)"))
    assert not member_by_search(words, Lasso.parse("(10)"))


def test_run_corpus_reports_crashes_as_failures():
    from omegapower.corpus import Check, CorpusEntry

    broken = CorpusEntry("broken", "", None, [Check("explodes", lambda: 1 / 0, "computed")])
    (result,) = run_corpus([broken])
    assert not result.ok and "ZeroDivisionError" in result.error
