import itertools

import pytest

from conftest import S, ins, sample_frameworks
from ubsem import fixtures
from ubsem.errors import ResourceLimitError
from ubsem.framework import build_framework
from ubsem.labelling import Label, Labelling
from ubsem.oracle import (
    BruteForce,
    brute_force_credulous,
    brute_force_weakly_complete,
    is_complete,
    is_weakly_complete,
    naive_grounded_extension,
    naive_stable_labellings,
)
from ubsem.propagation import grounded_labelling

CHAIN = build_framework("abc", [("a", "b"), ("b", "c")])
SELF = fixtures.load("g4")
CYC3 = fixtures.load("g3")
FLOAT = fixtures.load("g5")


def test_is_weakly_complete_examples():
    assert is_weakly_complete(SELF, Labelling.of(SELF, "b"))
    assert not is_weakly_complete(SELF, Labelling.of(SELF, "ab"))
    assert not is_weakly_complete(CHAIN, Labelling.all_undec(CHAIN))


def test_is_complete_examples():
    assert not is_complete(FLOAT, Labelling.of(FLOAT, "c"))
    assert is_complete(CHAIN, Labelling.of(CHAIN, "ac", "b"))
    assert is_complete(CYC3, Labelling.all_undec(CYC3))


def test_brute_force_examples():
    assert set(brute_force_weakly_complete(CYC3)) == {Labelling.all_undec(CYC3)}
    assert len(brute_force_weakly_complete(fixtures.load("fig6"))) == 3
    single = build_framework("a", [])
    assert set(brute_force_weakly_complete(single)) == {Labelling.of(single, "a")}


def test_credulous_examples():
    assert brute_force_credulous(fixtures.load("scc"), "d")
    assert not brute_force_credulous(CYC3, "a")
    assert not brute_force_credulous(CHAIN, "b")


def test_cap():
    with pytest.raises(ResourceLimitError):
        BruteForce(cap=2).weakly_complete(CHAIN)
    assert len(BruteForce(cap=3).weakly_complete(CHAIN)) == 1


def test_enumeration_order():
    fw = build_framework("ab", [])
    first = [dict(lab.as_dict()) for lab in itertools.islice(BruteForce().labellings(fw), 4)]
    assert first[0] == {"a": Label.IN, "b": Label.IN}
    assert first[1] == {"a": Label.IN, "b": Label.OUT}
    assert first[3] == {"a": Label.OUT, "b": Label.IN}


def test_complete_implies_weakly_complete_exhaustive():
    for fw in sample_frameworks(60, 6, seed=21):
        for lab in BruteForce().labellings(fw):
            if is_complete(fw, lab):
                assert is_weakly_complete(fw, lab)


def test_grounded_member_and_naive_oracles():
    for fw in sample_frameworks(200, 7, seed=22):
        g = grounded_labelling(fw)
        assert g in brute_force_weakly_complete(fw)
        assert g.in_ == naive_grounded_extension(fw)
        assert ins(naive_stable_labellings(fw)) == ins(BruteForce().stable(fw))
