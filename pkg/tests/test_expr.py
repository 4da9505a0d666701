import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from emcalc.expr import Expression, ExpressionError, ExpressionSyntaxError, scalar_field, vector_field
from emcalc.fields import FieldEvaluationError
from emcalc.geometry import Position, Vec3


@pytest.mark.parametrize("text,value", [
    ("1 + 2*3", 7.0),
    ("2^3^2", 512.0),
    ("2**3", 8.0),
    ("-2^2", -4.0),
    ("(1 + 2)*3", 9.0),
    ("sin(pi/2) + cos(0)", 2.0),
    ("sqrt(16) + exp(0) + log(1)", 5.0),
    ("abs(-3) + step(0) + step(-1)", 4.0),
    ("1e-3*1e3", 1.0),
    (".5 + 1.", 1.5),
])
def test_constant_expressions(text, value):
    assert Expression(text).evaluate() == pytest.approx(value)


def test_variables_and_kind():
    e = Expression("x*y - z")
    assert e.kind == "scalar" and e.names == {"x", "y", "z"}
    assert e.evaluate(x=2, y=3, z=1) == 5.0
    v = Expression("-z*yhat + y*zhat")
    assert v.kind == "vector"
    assert np.array_equal(v.evaluate(x=0, y=2, z=3), [0, -3, 2])
    assert Expression("t^2", ("t",)).evaluate(t=np.array([1, 2])).tolist() == [1, 4]


def test_homework_field_from_text():
    F = vector_field("-z*yhat + y*zhat")
    assert F(Position(1, 2, 3)) == Vec3(0, -3, 2)


@pytest.mark.parametrize("text,fragment", [
    ("x +", "unexpected end"),
    ("foo(x)", "unknown function"),
    ("q + 1", "unknown name"),
    ("x + xhat", "cannot add a scalar and a vector"),
    ("xhat*yhat", "cannot multiply two vectors"),
    ("1/xhat", "cannot divide by a vector"),
    ("sin(xhat)", "need scalar arguments"),
    ("x $ y", "unexpected character"),
    ("(x", r"expected '\)'"),
])
def test_syntax_errors(text, fragment):
    with pytest.raises(ExpressionSyntaxError, match=fragment) as info:
        Expression(text)
    assert "column" in str(info.value)


@pytest.mark.parametrize("text,fragment", [
    ("1/x", "division by zero"),
    ("sqrt(x - 1)", "square root of a negative"),
    ("log(x)", "logarithm"),
    ("(x - 1)^0.5", "fractional power"),
    ("x^(-1)", "division by zero"),
])
def test_runtime_errors(text, fragment):
    with pytest.raises(ExpressionError, match=fragment):
        Expression(text).evaluate(x=np.array([2.0, 0.0]))


def test_field_error_names_offending_position():
    f = scalar_field("1/x")
    with pytest.raises(FieldEvaluationError) as info:
        f.evaluate(np.array([[1, 2, 3], [0, 5, 6]], dtype=float))
    assert info.value.position == Position(0, 5, 6)


def test_field_kind_mismatch():
    with pytest.raises(ExpressionSyntaxError):
        scalar_field("xhat")
    with pytest.raises(ExpressionSyntaxError):
        vector_field("x")


def test_missing_variable():
    with pytest.raises(TypeError):
        Expression("x + y").evaluate(x=1)


@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5))
def test_matches_python_arithmetic(x, y, z):
    e = Expression("x*y - z^2 + sin(x)*cos(y) + 3")
    assert e.evaluate(x=x, y=y, z=z) == pytest.approx(x * y - z**2 + math.sin(x) * math.cos(y) + 3, abs=1e-12)
