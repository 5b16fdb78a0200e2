from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from multctl.monomial import MonomialIdeal
from multctl.syntax import (
    ParseError,
    default_names,
    parse_expression,
    parse_ideal,
    parse_rational,
    parse_variables,
    render_ideal,
)


def test_parse_examples():
    assert parse_ideal("<x^2, y^3>", ["x", "y"]) == MonomialIdeal.of(2, [(2, 0), (0, 3)])
    assert parse_ideal("<1>", ["x", "y"]).is_unit
    assert parse_ideal("<x^2, x^3*y>", ["x", "y"]).generators == ((2, 0),)
    assert parse_ideal("<0>", ["x"]).is_zero
    assert parse_ideal(" < x * y ^ 2 , y*x > ", ["x", "y"]) == MonomialIdeal.of(2, [(1, 1)])


def test_inferred_variable_order():
    expr = parse_expression("<b^2, a>")
    assert expr.variables == ("b", "a")
    assert expr.to_ideal() == MonomialIdeal.of(2, [(2, 0), (0, 1)])


@pytest.mark.parametrize("text,fragment,pos", [
    ("<x^-1>", "negative exponent", 3),
    ("<x, q>", "unknown variable", 4),
    ("<x, y", "expected '>'", 5),
    ("<x^>", "expected an exponent", 3),
    ("<2*x>", "constant term must be 1", 1),
    ("x, y>", "expected '<'", 0),
    ("<x> y", "trailing input", 4),
    ("<x $ y>", "unexpected character", 2),
])
def test_parse_errors_carry_position(text, fragment, pos):
    with pytest.raises(ParseError) as info:
        parse_ideal(text, ["x", "y"])
    assert fragment in str(info.value)
    assert info.value.position == pos


def test_variables_and_rationals():
    assert parse_variables("x, y,z") == ("x", "y", "z")
    with pytest.raises(ParseError):
        parse_variables("x,x")
    with pytest.raises(ParseError):
        parse_variables("1x")
    assert parse_rational(" -3/6 ") == F(-1, 2)
    assert parse_rational("4") == 4
    for bad in ("1/0", "1.5", "a"):
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_render():
    names = ("x", "y")
    assert render_ideal(MonomialIdeal.of(2, [(2, 0), (1, 1), (0, 3)]), names) == "<x^2, x*y, y^3>"
    assert render_ideal(MonomialIdeal.unit(2), names) == "<1>"
    assert render_ideal(MonomialIdeal.zero(2), names) == "<0>"
    assert default_names(4) == ("x1", "x2", "x3", "x4")
    assert default_names(2, "y") == ("y1", "y2")


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.tuples(*[st.integers(0, 5)] * n), max_size=5).map(
    lambda g: (n, g))))
def test_round_trip(data):
    n, gens = data
    I = MonomialIdeal.of(n, gens)
    names = default_names(n)
    assert parse_ideal(render_ideal(I, names), names) == I
