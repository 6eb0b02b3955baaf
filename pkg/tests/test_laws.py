import pytest

from lsb.catalog import abelian, b2, b4, h_even, h_odd
from lsb.errors import UnsupportedMethod
from lsb.exactlin import F5, QQ
from lsb.laws import (FAILS, HOLDS, LAWS, VACUOUS, LawVerdict, UnknownLaw, append_finding, check_all,
                      check_law, hypotheses_met, list_laws)

from helpers import build


def test_registry():
    assert len(list_laws()) == 25
    assert {"T4-M1", "T4-M2", "T4-M3", "P3-8i", "P3-8ii", "P3-8iii"} <= set(LAWS)
    with pytest.raises(UnknownLaw):
        check_law(b2(), "P9-99")


def test_examples():
    assert check_law(b2(), "P3-4").outcome == HOLDS
    assert check_law(abelian(2, 2), "L3-1").outcome == VACUOUS
    assert check_law(h_even(1, 0), "T2-centerbound").outcome == HOLDS


def test_abelian_and_breadth_one():
    assert check_law(abelian(1, 1), "L2-abelian").outcome == HOLDS
    assert check_law(h_odd(2), "P2-breadth1").outcome == HOLDS
    assert check_law(h_even(1, 1), "T2-structure1").outcome == HOLDS
    assert check_law(b4(), "T4-M2").outcome == HOLDS


def test_verdict_witness_invariant():
    with pytest.raises(ValueError):
        LawVerdict(FAILS)
    with pytest.raises(ValueError):
        LawVerdict(HOLDS, witness="x")


def test_hypotheses_logged():
    v = check_law(b2(), "P3-4")
    assert v.hypotheses_log and hypotheses_met(v)


def test_deterministic():
    L = b4()
    assert check_all(L) == check_all(L)


def test_non_nilpotent_is_vacuous_or_rejected():
    L = build(F5, ["e1", "e2"], [], [("e1", "e2", {"e2": 1})])
    assert check_law(L, "T4-M2").outcome == VACUOUS


def test_rationals_unsupported():
    with pytest.raises(UnsupportedMethod):
        check_law(h_odd(1, field=QQ), "T4-M1")


def test_findings_log(tmp_path):
    path = tmp_path / "findings.log"
    append_finding(path, "law-fails", {"law": "X", "field": "F5"}, h_odd(1))
    append_finding(path, "search", {"outcome": "Empty"})
    text = path.read_text()
    assert text.count("=== ") == 2
    assert "[x1,y1] = 1*z" in text


@pytest.mark.slow
def test_corpus_oracle_laws_hold():
    from lsb.corpus import corpus
    bad = []
    for seed, L in corpus():
        for law in ("L2-abelian", "P2-breadth1", "T2-centerbound", "T4-M1", "T4-M2"):
            if check_law(L, law).outcome == FAILS:
                bad.append((seed, law))
    assert not bad
