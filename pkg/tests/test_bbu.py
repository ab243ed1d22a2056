import itertools

import pytest

from conftest import S, ins, sample_frameworks
from ubsem import bbu, fixtures
from ubsem.bbu import (
    DefenceReading,
    bbu_complete,
    bbu_grounded,
    bbu_preferred,
    conflict_free_sets,
    extensions_to_labellings,
    reduct,
    weakly_admissible_sets,
    weakly_defends,
)
from ubsem.errors import FrameworkError, ResourceLimitError
from ubsem.framework import build_framework, is_conflict_free
from ubsem.oracle import brute_force_bbu_complete, brute_force_weakly_admissible
from ubsem.propagation import grounded_labelling
from ubsem.weakly import dung_complete_labellings, weakly_complete_labellings

FLOAT = fixtures.load("g5")
SELF = fixtures.load("g4")
CYC3 = fixtures.load("g3")
CHAIN = fixtures.load("g1")
FIG9 = fixtures.load("fig9")


def test_reduct():
    assert len(reduct(FLOAT, {"a"})) == 0
    assert reduct(CHAIN, ()) == CHAIN
    red = reduct(SELF, {"b"})
    assert red.arguments == ("a",) and red.attacks == {("a", "a")}
    with pytest.raises(FrameworkError):
        reduct(CHAIN, {"z"})


def test_weakly_admissible_examples():
    assert weakly_admissible_sets(SELF).as_set() == {S(), S("b")}
    adm = weakly_admissible_sets(FLOAT).as_set()
    assert {S("a"), S("b")} <= adm and not any("c" in e for e in adm)
    single = build_framework("a", [])
    assert weakly_admissible_sets(single).as_set() == {S(), S("a")}


def test_polarity_constant_pinned():
    assert bbu.HARMLESS_IF_IN_REDUCT_ADMISSIBLE is False


def test_weakly_defends_examples():
    assert weakly_defends(SELF, (), {"b"})
    assert weakly_defends(CHAIN, {"a"}, {"c"})
    assert not weakly_defends(CYC3, (), {"a"})


def test_semantics_examples():
    assert bbu_complete(FLOAT).as_set() == {S(), S("a"), S("b")}
    assert bbu_preferred(SELF).as_set() == {S("b")}


def test_fig9_grounded():
    assert grounded_labelling(FIG9).in_ == set()
    assert bbu_grounded(FIG9).as_set() == {S("a1", "b1"), S("a2", "b2")}


def test_empty_set_defends_cycle_member():
    # c1 sits on an odd cycle, so nothing stops the empty set defending b1
    wa = bbu.WeakAdmissibility(FIG9)
    assert [x for x in conflict_free_sets(FIG9) if x and wa.weakly_defends(S(), x)] == [S("b1")]


def test_literal_reading():
    assert bbu_complete(CHAIN, reading=DefenceReading.LITERAL).as_set() == {S("c"), S("a", "c")}
    assert bbu_complete(CHAIN).as_set() == {S("a", "c")}
    for fw in (FLOAT, FIG9):
        assert bbu_grounded(fw, reading=DefenceReading.LITERAL) == bbu_grounded(fw)


def test_reduct_share_self_defence():
    for fw in sample_frameworks(80, 5, seed=41):
        wa = bbu.WeakAdmissibility(fw, reading=DefenceReading.REDUCT_SHARE)
        adm = set(wa.sets())
        for e in conflict_free_sets(fw):
            assert (e in adm) == wa.weakly_defends(e, e)


def test_divergence_witness():
    assert S("c") in ins(weakly_complete_labellings(FLOAT))
    assert not any("c" in e for e in bbu_complete(FLOAT))


def test_conflict_free_sets_complete():
    for fw in sample_frameworks(60, 6, seed=42):
        expect = {
            frozenset(c) for r in range(len(fw) + 1)
            for c in itertools.combinations(fw.arguments, r) if is_conflict_free(fw, c)
        }
        assert set(conflict_free_sets(fw)) == expect


def test_against_oracle():
    for fw in sample_frameworks(120, 6, seed=43):
        adm = weakly_admissible_sets(fw)
        assert adm.as_set() == set(brute_force_weakly_admissible(fw))
        assert all(is_conflict_free(fw, e) for e in adm)
        assert bbu_complete(fw).as_set() == set(brute_force_bbu_complete(fw))
        literal = bbu_complete(fw, reading=DefenceReading.LITERAL).as_set()
        assert literal == set(brute_force_bbu_complete(fw, "literal"))


def test_admissible_sets_are_weakly_admissible():
    for fw in sample_frameworks(120, 7, seed=44):
        wa = weakly_admissible_sets(fw)
        for lab in dung_complete_labellings(fw):
            assert lab.in_ in wa


def test_preferred_and_grounded_shape():
    for fw in sample_frameworks(80, 6, seed=45):
        pr, gr, co = bbu_preferred(fw), bbu_grounded(fw), bbu_complete(fw)
        assert not any(x < y for x in pr for y in pr)
        assert len(gr) >= 1 and all(g in co for g in gr)


def test_guard_and_labellings():
    with pytest.raises(ResourceLimitError):
        bbu_complete(build_framework([f"a{i}" for i in range(21)], []))
    labs = extensions_to_labellings(FLOAT, [S("a")])
    (lab,) = labs
    assert lab.in_ == {"a"} and lab.out == {"b", "c"}
