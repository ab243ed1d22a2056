import pytest

from ubsem import fixtures
from ubsem.framework import build_framework
from ubsem.labelling import Labelling
from ubsem.principles import (
    PRINCIPLES,
    SampleSpec,
    Verdict,
    check_abstention,
    check_on,
    check_cycle_homogeneity,
    check_directionality,
    check_i_maximality,
    check_labelling_principles,
    expected,
    principle_report,
    random_framework,
)
from ubsem import semantics as sem

SELF = fixtures.load("g4")
FLOAT = fixtures.load("g5")
CHAIN = fixtures.load("g1")
TWO = fixtures.load("two_cycle")


def test_labelling_flags():
    f = check_labelling_principles(SELF, Labelling.of(SELF, "b"))
    assert (f.conflict_free, f.admissible, f.reinstatement, f.rejection) == (True, False, True, True)
    f = check_labelling_principles(CHAIN, Labelling.of(CHAIN, "ac", "b"))
    assert f.conflict_free and f.admissible and f.reinstatement and f.rejection
    assert not check_labelling_principles(FLOAT, Labelling.of(FLOAT, "c")).admissible


def test_directionality():
    res = check_directionality(FLOAT, "WPR")
    assert res.verdict is Verdict.REFUTED and "{a,b}" in res.detail
    assert check_directionality(FLOAT, "WCO").holds
    for s in sem.SEMANTICS:
        assert check_directionality(CHAIN, s).holds


def test_abstention():
    assert check_abstention(FLOAT, "WCO").holds
    assert not check_abstention(TWO, "WPR").holds
    for s in sem.SEMANTICS:
        assert check_abstention(CHAIN, s).holds


def test_i_maximality():
    assert not check_i_maximality(sem.labellings("WCO", SELF)).holds
    assert check_i_maximality(sem.labellings("WPR", FLOAT)).holds
    assert check_i_maximality([Labelling.all_undec(CHAIN)]).holds


def test_cycle_homogeneity():
    assert check_cycle_homogeneity("UBGR", 7).holds
    assert not check_cycle_homogeneity("CO", 2).holds
    assert check_cycle_homogeneity("GR", 7).holds
    with pytest.raises(ValueError):
        check_cycle_homogeneity("GR", 1)


def test_random_framework():
    fw = random_framework(3, 0.0, 5)
    assert fw.arguments == ("a1", "a2", "a3") and not fw.attacks
    assert random_framework(1, 1.0, 5).attacks == {("a1", "a1")}
    snap = random_framework(6, 0.3, 42)
    assert snap == random_framework(6, 0.3, 42)
    assert sorted(snap.attacks) == [
        ("a1", "a2"), ("a1", "a3"), ("a1", "a4"), ("a2", "a2"), ("a2", "a4"), ("a2", "a5"),
        ("a3", "a1"), ("a3", "a2"), ("a3", "a5"), ("a4", "a2"), ("a4", "a6"), ("a5", "a3"), ("a5", "a4"),
    ]
    with pytest.raises(ValueError):
        random_framework(0, 0.5, 1)
    with pytest.raises(ValueError):
        random_framework(2, 1.5, 1)


def test_overrides_follow_text():
    assert expected("WPR", "directionality") is False
    assert expected("WPR", "abstention") is False
    assert expected("UBGR", "abstention") is True


@pytest.fixture(scope="module")
def report():
    return principle_report(sem.SEMANTICS, SampleSpec(n_max=6, samples=120, seed=1))


def test_report_agrees_with_expectations(report):
    assert report.disagreements() == []


def test_refutations_refail(report):
    for row in report.rows.values():
        if row.verdict == Verdict.REFUTED.value and row.framework is not None:
            again = check_on(row.framework, row.semantics, row.principle)
            assert not again.holds and again.detail == row.detail


def test_report_cardinalities(report):
    assert report.row("UBGR", "cardinality").verdict == "1"
    assert report.row("GR", "cardinality").verdict == "1"
    assert report.row("ST", "cardinality").verdict == ">=0"
    assert report.row("WCO", "cardinality").verdict == ">=1"


def test_render_is_stable(report):
    text = report.render()
    assert text == report.render()
    assert "note: WPR directionality" in text
    assert all(p in text for p in PRINCIPLES)
