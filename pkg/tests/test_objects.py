import pytest
from hypothesis import given, strategies as st

from p1stab import ParseError, class_of, format_object, parse_object
from p1stab.kclass import KClass
from p1stab.objects import DecomposedObject, LineBundle, Torsion, act_object

from conftest import objects


def test_parse_examples():
    obj = parse_object("O(3)[1] + 2*O(-2)")
    assert dict(obj.summands) == {LineBundle(3, 1): 1, LineBundle(-2, 0): 2}
    assert parse_object("T(x0,2)").summands == ((Torsion("x0", 2, 0), 1),)
    assert parse_object("O + O").summands == ((LineBundle(0), 2),)
    assert parse_object("O[-1]").summands == ((LineBundle(0, -1), 1),)
    assert parse_object("0").is_zero


@pytest.mark.parametrize(
    "text",
    ["", "O(", "O(1", "T(x,0)", "T(x)", "2*", "O(1) +", "Q(1)", "O(1)[", "O(1)(2)", "-1*O"],
)
def test_parse_errors(text):
    with pytest.raises((ParseError, ValueError)):
        parse_object(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_object("O(1) + Q(2)")
    assert info.value.pos == 7


@given(objects)
def test_format_fixed_point(obj):
    text = format_object(obj)
    assert parse_object(text) == obj
    assert format_object(parse_object(text)) == text


@given(objects)
def test_normalized(obj):
    keys = [ind for ind, _ in obj.summands]
    assert len(keys) == len(set(keys))
    assert keys == sorted(keys, key=lambda k: k.sort_key)
    assert all(m >= 1 for _, m in obj.summands)


def test_act_examples():
    assert act_object(parse_object("O(2)"), -2, 1) == parse_object("O[1]")
    assert act_object(parse_object("T(x,3)"), 5, 0) == parse_object("T(x,3)")
    got = act_object(parse_object("2*O + O(-1)[1]"), 1, -1)
    assert dict(got.summands) == {LineBundle(1, -1): 2, LineBundle(0, 0): 1}


@given(objects, st.integers(-10, 10), st.integers(-5, 5))
def test_act_invertible(obj, a, b):
    assert act_object(act_object(obj, a, b), -a, -b) == obj


@given(objects, st.integers(-10, 10))
def test_act_on_classes(obj, m):
    c = class_of(obj)
    assert class_of(act_object(obj, 0, 1)) == -c
    assert class_of(act_object(obj, 1, 0)) == c + KClass(0, c.rank)
    assert class_of(act_object(obj, m, 0)) == c + KClass(0, m * c.rank)


def test_torsion_length_validated():
    with pytest.raises(ValueError):
        Torsion("x", 0)
    with pytest.raises(ValueError):
        DecomposedObject.of([(LineBundle(0), -1)])
