from hypothesis import given, strategies as st

from p1stab import KClass, class_of, euler_form, parse_object
from p1stab.kclass import ZERO

from conftest import objects

ints = st.integers(-50, 50)
kclasses = st.builds(KClass, ints, ints)


def test_class_examples():
    assert class_of(parse_object("O(2)")) == KClass(1, 2)
    assert class_of(parse_object("O(-1)[1]")) == KClass(-1, 1)
    assert class_of(parse_object("3*O + 2*O(-1)[1]")) == KClass(1, 2)
    assert class_of(parse_object("T(x,3)[2]")) == KClass(0, 3)
    assert class_of(parse_object("0")) == ZERO


def test_euler_examples():
    assert euler_form(KClass(1, 0), KClass(1, 3)) == 4
    assert euler_form(KClass(1, 0), KClass(1, 0)) == 1
    assert euler_form(KClass(0, 1), KClass(1, 0)) == -1


@given(kclasses, kclasses, kclasses)
def test_euler_bilinear(a, b, c):
    assert euler_form(a + b, c) == euler_form(a, c) + euler_form(b, c)
    assert euler_form(a, b + c) == euler_form(a, b) + euler_form(a, c)
    assert euler_form(-a, b) == -euler_form(a, b)


@given(kclasses)
def test_group_laws(a):
    assert a + (-a) == ZERO
    assert a - a == ZERO
    assert a * 3 == a + a + a
    assert KClass.from_json(a.to_json()) == a


@given(objects, objects)
def test_class_additive_and_odd_under_shift(x, y):
    assert class_of(x + y) == class_of(x) + class_of(y)
    assert class_of(x.shift(1)) == -class_of(x)
    assert class_of(x.shift(2)) == class_of(x)


def test_large_integers_exact():
    big = 10**30
    assert euler_form(KClass(big, 1), KClass(1, big)) == big + big * big - 1
