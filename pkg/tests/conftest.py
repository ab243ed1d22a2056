import random

import pytest
from hypothesis import settings, strategies as st

from ubsem import fixtures
from ubsem.framework import build_framework
from ubsem.principles import random_framework

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def frameworks(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    names = [f"x{i}" for i in range(n)]
    pairs = [(a, b) for a in names for b in names]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)) if pairs else st.just([]))
    return build_framework(names, chosen)


def sample_frameworks(count, n_max, seed, p_values=(0.1, 0.3, 0.5)):
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(1, n_max)
        out.append(random_framework(n, p_values[k % len(p_values)], rng.randrange(2**32)))
    return out


@pytest.fixture
def fx():
    return fixtures.load


def ins(labs):
    return {frozenset(lab.in_) for lab in labs}


def S(*xs):
    return frozenset(xs)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
