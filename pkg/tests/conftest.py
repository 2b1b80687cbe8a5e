import math
import random

import pytest
from hypothesis import settings, strategies as st

from p1stab import StabilityCondition
from p1stab.objects import DecomposedObject, LineBundle, Torsion

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

POINTS = ("x", "y", "z")


def condition(regime, i, beta, gap, lma, lmb):
    if regime == "wall":
        gap = 0.0
    elif regime == "geometric":
        gap = -abs(gap)
    else:
        gap = abs(gap)
    return StabilityCondition(i, beta + gap, beta, lma, lmb)


@st.composite
def conditions(draw, regimes=("geometric", "wall", "quiver")):
    regime = draw(st.sampled_from(regimes))
    i = draw(st.integers(-4, 4))
    beta = draw(st.floats(-3.0, 3.0))
    if regime == "geometric":
        gap = draw(st.floats(0.01, 0.99))
    else:
        gap = draw(st.floats(0.01, 2.0))
    lma = draw(st.floats(-2.0, 2.0))
    lmb = draw(st.floats(-2.0, 2.0))
    return condition(regime, i, beta, gap, lma, lmb)


indecomposables = st.one_of(
    st.builds(LineBundle, st.integers(-8, 8), st.integers(-2, 2)),
    st.builds(Torsion, st.sampled_from(POINTS), st.integers(1, 3), st.integers(-2, 2)),
)

sheaves = st.one_of(
    st.builds(LineBundle, st.integers(-8, 8)),
    st.builds(Torsion, st.sampled_from(POINTS), st.integers(1, 4)),
)

objects = st.lists(st.tuples(indecomposables, st.integers(1, 3)), min_size=1, max_size=4).map(DecomposedObject.of)
sheaf_objects = st.lists(st.tuples(sheaves, st.integers(1, 3)), min_size=1, max_size=3).map(DecomposedObject.of)


@pytest.fixture
def geo():
    return StabilityCondition(0, 0.25, 0.75, 0.0, 0.0)


@pytest.fixture
def quiver():
    return StabilityCondition(0, 0.9, 0.1, 0.0, 0.0)


@pytest.fixture
def wall():
    return StabilityCondition(0, 0.5, 0.5, 0.0, 0.0)


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
