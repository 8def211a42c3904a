from __future__ import annotations

import pytest

from colonlab.errors import ParseError
from colonlab.parsing import parse_ideal_generators, parse_polynomial
from colonlab.polynomial import Polynomial

from conftest import R2


def P(text):
    return parse_polynomial(text, R2)


def test_precedence():
    assert P("x^2 + 3*x*y - y^3") == P("(x^2) + ((3*x)*y) - (y^3)")
    assert P("2*x^2") == P("x^2") * 2
    assert P("-x^2") == -P("x^2")
    assert P("x - y - x") == -P("y")
    assert P("(x+y)^2") == P("x^2 + 2*x*y + y^2")
    assert P("  x   *y ") == P("x*y")


def test_large_literals_reduce_mod_p():
    assert P("32003*x") == P("0")
    assert P("32004") == P("1")


@pytest.mark.parametrize("text,pos", [
    ("x +", 3), ("x ^ y", 4), ("(x + y", 6), ("x $ y", 2), ("w + x", 0), ("x^2^3", 3), ("", 0),
])
def test_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as exc:
        P(text)
    assert exc.value.position == pos


def test_ideal_expressions():
    assert parse_ideal_generators("ideal(x^2, x*y)", R2) == [P("x^2"), P("x*y")]
    assert parse_ideal_generators("ideal()", R2) == []
    assert parse_ideal_generators("x*y", R2) == [P("x*y")]
    assert parse_ideal_generators("ideal(0)", R2) == [Polynomial(R2, {})]
    with pytest.raises(ParseError):
        parse_ideal_generators("ideal(x,)", R2)
    with pytest.raises(ParseError):
        parse_ideal_generators("ideal(x) y", R2)
