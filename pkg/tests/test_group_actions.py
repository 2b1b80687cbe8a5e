import cmath
import math

import pytest
from hypothesis import assume, given, strategies as st

from p1stab import (
    GroupElement,
    RegimeError,
    StabilityCondition,
    act,
    act_object,
    equivalent,
    hn,
    is_semistable,
    phase_of,
    rebase,
)
from p1stab.group_actions import SHIFT, compose
from p1stab.objects import LineBundle

from conftest import conditions, objects

small = st.floats(-2.0, 2.0)
elements = st.builds(
    lambda x, y, m: GroupElement(complex(x, y), m), small, st.floats(-2 * math.pi, 2 * math.pi), st.integers(-5, 5)
)


def test_act_examples(geo):
    got = act(GroupElement(1j * math.pi, 0), geo)
    assert got.params() == pytest.approx((0, 1.25, 1.75, 0.0, 0.0))
    got = act(GroupElement(math.log(2), 0), geo)
    assert got.params() == pytest.approx((0, 0.25, 0.75, math.log(2), math.log(2)))
    assert act(GroupElement(0j, 3), geo).params() == (3, 0.25, 0.75, 0.0, 0.0)
    assert act(SHIFT, geo) == act(GroupElement(1j * math.pi), geo)


@given(elements, elements)
def test_group_law(g1, g2):
    assert compose(g1, g2) == GroupElement(g1.z + g2.z, g1.tensor + g2.tensor)
    assert g1 @ g2 == g2 @ g1
    assert (g1 @ g1.inverse()) == GroupElement(0j, 0)
    assert GroupElement.from_json(g1.to_json()) == g1


@given(conditions(), st.integers(-3, 3), st.integers(-3, 3), st.integers(-4, 4), st.integers(-4, 4))
def test_action_composes_exactly(sc, a, b, m1, m2):
    # Dyadic increments keep the float arithmetic exact.
    g1 = GroupElement(complex(a / 8, math.pi * b / 8), m1)
    g2 = GroupElement(complex(b / 4, math.pi * a / 4), m2)
    lhs = act(g1, act(g2, sc))
    rhs = act(g1 @ g2, sc)
    assert lhs.i == rhs.i
    assert lhs.params()[1:] == pytest.approx(rhs.params()[1:], abs=1e-12)


@given(conditions(), elements)
def test_inverse(sc, g):
    assert equivalent(act(g.inverse(), act(g, sc)), sc, 1e-9)


@given(conditions(), st.floats(-3, 3), st.floats(-3, 3))
def test_free(sc, x, y):
    assume(abs(x) > 1e-6 or abs(y) > 1e-6)
    moved = act(GroupElement(complex(x, y)), sc)
    assert moved.params() != sc.params()


@given(conditions(), elements, objects)
def test_semistability_equivariant(sc, g, obj):
    pure = GroupElement(g.z, 0)
    assert is_semistable(act(pure, sc), obj) == is_semistable(sc, obj)
    twist = GroupElement(0j, g.tensor)
    assert is_semistable(act(twist, sc), act_object(obj, g.tensor, 0)) == is_semistable(sc, obj)


@given(conditions(), elements, objects)
def test_hn_equivariant(sc, g, obj):
    moved = act(GroupElement(g.z, 0), sc)
    f0 = hn(sc, obj)
    f1 = hn(moved, obj)
    assert [p.piece for p in f0] == [p.piece for p in f1]
    scale = cmath.exp(g.z)
    for p, q in zip(f0, f1):
        assert q.phase == pytest.approx(p.phase + g.z.imag / math.pi, abs=1e-9)
        assert abs(q.charge - scale * p.charge) <= 1e-9 * max(1.0, abs(q.charge))


def test_rebase_example(geo):
    up = rebase(geo, 1)
    assert up.alpha == pytest.approx(0.39758361765043326, abs=1e-9)
    assert up.beta == pytest.approx(1.25, abs=1e-12)
    assert up.log_m_alpha == pytest.approx(math.log(math.sqrt(5)), abs=1e-12)
    assert up.log_m_beta == pytest.approx(0.0, abs=1e-12)
    assert equivalent(rebase(up, 0), geo)
    assert rebase(geo, 0) is geo


def test_rebase_errors(quiver, wall):
    with pytest.raises(RegimeError):
        rebase(quiver, 1)
    with pytest.raises(RegimeError):
        rebase(wall, 1)


@given(conditions(("geometric",)), st.integers(-6, 6))
def test_rebase_round_trip(sc, d):
    other = rebase(sc, sc.i + d)
    back = rebase(other, sc.i)
    assert equivalent(back, sc, 1e-9)
    assert equivalent(sc, other, 1e-9)
    # Same slicing: phases of every bundle agree.
    for n in range(sc.i - 5, sc.i + 6):
        assert phase_of(other, LineBundle(n)) == pytest.approx(phase_of(sc, LineBundle(n)), abs=1e-9)


def test_equivalent_examples(geo):
    assert equivalent(geo, rebase(geo, 5))
    assert not equivalent(geo, act(GroupElement(0.1), geo))
    assert not equivalent(geo, act(GroupElement(2j * math.pi), geo))
    assert not equivalent(geo, StabilityCondition(0, 0.9, 0.1))
