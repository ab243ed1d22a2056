import itertools

import pytest
from hypothesis import given

from conftest import frameworks
from ubsem.errors import FrameworkError
from ubsem.framework import (
    attacked_by,
    attackers,
    build_framework,
    initial_arguments,
    is_acyclic_argument,
    restrict,
    scc_decomposition,
)

CHAIN = build_framework("abc", [("a", "b"), ("b", "c")])
SELF = build_framework("ab", [("a", "a"), ("a", "b")])
CYC3 = build_framework("abc", [("a", "b"), ("b", "c"), ("c", "a")])
SCC = build_framework("abcde", [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e")])
FLOAT = build_framework("abc", [("a", "b"), ("b", "a"), ("a", "c"), ("b", "c")])


def test_build_keeps_order():
    fw = build_framework(["c", "a", "b"], [("a", "b")])
    assert fw.arguments == ("c", "a", "b")


def test_single_argument():
    fw = build_framework(["a"], [])
    assert len(fw) == 1 and not fw.attacks


@pytest.mark.parametrize("args,atts", [
    (["a", "b"], [("a", "c")]),
    (["a", "a"], []),
    (["a", ""], []),
])
def test_build_rejects(args, atts):
    with pytest.raises(FrameworkError):
        build_framework(args, atts)


def test_attackers_and_targets():
    assert attackers(CHAIN, "b") == {"a"}
    assert attackers(SELF, "a") == {"a"}
    assert attackers(CHAIN, "a") == set()
    assert attacked_by(SELF, "a") == {"a", "b"}
    assert attacked_by(CHAIN, "c") == set()
    assert attacked_by(CYC3, "c") == {"a"}


def test_unknown_argument():
    with pytest.raises(FrameworkError):
        attackers(CHAIN, "z")


def test_initial_arguments():
    assert initial_arguments(CHAIN) == {"a"}
    assert initial_arguments(CYC3) == set()
    assert initial_arguments(SELF) == set()


def test_restrict():
    sub = restrict(CHAIN, {"a", "b"})
    assert sub.arguments == ("a", "b") and sub.attacks == {("a", "b")}
    assert restrict(CYC3, {"a", "c"}).attacks == {("c", "a")}
    assert len(restrict(CHAIN, set())) == 0
    with pytest.raises(FrameworkError):
        restrict(CHAIN, {"q"})


def test_scc_examples():
    assert [set(c) for c in scc_decomposition(CHAIN)] == [{"a"}, {"b"}, {"c"}]
    assert [set(c) for c in scc_decomposition(SCC)] == [{"a", "b", "c"}, {"d"}, {"e"}]
    assert [set(c) for c in scc_decomposition(FLOAT)] == [{"a", "b"}, {"c"}]


def test_acyclic():
    assert not is_acyclic_argument(SELF, "a")
    assert is_acyclic_argument(SCC, "d")
    assert not is_acyclic_argument(CYC3, "b")


def _reach(fw):
    r = {(a, a) for a in fw.arguments} | set(fw.attacks)
    for k, i, j in itertools.product(fw.arguments, repeat=3):
        if (i, k) in r and (k, j) in r:
            r.add((i, j))
    return r


@given(frameworks(max_n=8))
def test_scc_matches_reachability(fw):
    dec = scc_decomposition(fw)
    r = _reach(fw)
    comps = [set(c) for c in dec.components]
    assert sorted(a for c in comps for a in c) == sorted(fw.arguments)
    for a in fw.arguments:
        mine = next(c for c in comps if a in c)
        assert mine == {b for b in fw.arguments if (a, b) in r and (b, a) in r}
    pos = {a: i for i, c in enumerate(dec.components) for a in c}
    for a, b in fw.attacks:
        assert pos[a] <= pos[b]


@given(frameworks())
def test_graph_queries_consistent(fw):
    assert restrict(fw, fw.arguments) == fw
    assert initial_arguments(fw) == {a for a in fw.arguments if not fw.attackers(a)}
    for a in fw.arguments:
        for b in fw.arguments:
            assert (b in attacked_by(fw, a)) == (a in attackers(fw, b))


def test_scc_deterministic_on_long_chain():
    names = [f"n{i}" for i in range(5000)]
    fw = build_framework(names, list(zip(names, names[1:])))
    assert [c[0] for c in scc_decomposition(fw).components] == names
