"""A small arithmetic language for fields, densities and parametrizations.

Grammar (usual precedence, ``^`` binds tightest and associates right)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom (("^" | "**") unary)?
    atom   := NUMBER | NAME | NAME "(" expr ")" | "(" expr ")"

Names are the declared variables (``x y z`` for fields, ``t s u`` for
parametrizations), the constant ``pi`` and the unit vectors ``xhat yhat
zhat``. An expression that mentions a unit vector is vector valued, e.g.
``-z*yhat + y*zhat``. Functions: ``sin cos tan exp log sqrt abs step``
(``step(a)`` is 1 for ``a >= 0`` and 0 otherwise).

Evaluation is vectorized over numpy arrays and raises `ExpressionError`
on division by zero and on roots/logs of out-of-range arguments.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .fields import FieldEvaluationError, ScalarField, VectorField
from .geometry import Position

__all__ = ["ExpressionError", "ExpressionSyntaxError", "Expression", "parse", "scalar_field", "vector_field"]


class ExpressionSyntaxError(ValueError):
    def __init__(self, message: str, text: str, offset: int):
        self.text = text
        self.offset = offset
        super().__init__(f"{message} at column {offset + 1} in {text!r}")


class ExpressionError(ArithmeticError):
    """Evaluation failed; `index` locates the first offending element."""

    def __init__(self, message: str, index: tuple = ()):
        self.index = index
        super().__init__(message)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>\*\*|[-+*/^(),]))"
)

_UNIT = {"xhat": (1.0, 0.0, 0.0), "yhat": (0.0, 1.0, 0.0), "zhat": (0.0, 0.0, 1.0)}
_CONST = {"pi": math.pi}
_FUNCS = {"sin", "cos", "tan", "exp", "log", "sqrt", "abs", "step"}


@dataclass(frozen=True)
class _Node:
    op: str
    args: tuple = ()
    value: object = None
    offset: int = 0


def _tokenize(text: str):
    pos, out = 0, []
    text_len = len(text.rstrip())
    while pos < text_len:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionSyntaxError("unexpected character", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, variables):
        self.text = text
        self.variables = set(variables)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, value=None):
        tok = self.tokens[self.i]
        if value is not None and tok[1] != value:
            raise ExpressionSyntaxError(f"expected {value!r}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self) -> _Node:
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExpressionSyntaxError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-"):
            _, op, off = self.take()
            node = _Node(op, (node, self.term()), offset=off)
        return node

    def term(self):
        node = self.unary()
        while self.peek()[1] in ("*", "/"):
            _, op, off = self.take()
            node = _Node(op, (node, self.unary()), offset=off)
        return node

    def unary(self):
        if self.peek()[1] in ("+", "-"):
            _, op, off = self.take()
            operand = self.unary()
            return operand if op == "+" else _Node("neg", (operand,), offset=off)
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] in ("^", "**"):
            _, _, off = self.take()
            return _Node("^", (base, self.unary()), offset=off)
        return base

    def atom(self):
        kind, value, off = self.take()
        if kind == "num":
            return _Node("num", value=float(value), offset=off)
        if kind == "name":
            if self.peek()[1] == "(":
                if value not in _FUNCS:
                    raise ExpressionSyntaxError(f"unknown function {value!r}", self.text, off)
                self.take("(")
                arg = self.expr()
                self.take(")")
                return _Node("call", (arg,), value=value, offset=off)
            if value in self.variables:
                return _Node("var", value=value, offset=off)
            if value in _CONST:
                return _Node("num", value=_CONST[value], offset=off)
            if value in _UNIT:
                return _Node("unit", value=value, offset=off)
            raise ExpressionSyntaxError(f"unknown name {value!r}", self.text, off)
        if value == "(":
            node = self.expr()
            self.take(")")
            return node
        raise ExpressionSyntaxError("expected a number, name or '('" if kind != "end" else "unexpected end",
                                    self.text, off)


def _kind(node: _Node, text: str) -> str:
    """'scalar' or 'vector'; raises on ill-typed combinations."""
    op = node.op
    if op in ("num", "var"):
        return "scalar"
    if op == "unit":
        return "vector"
    kinds = [_kind(a, text) for a in node.args]
    if op == "neg":
        return kinds[0]
    if op in ("+", "-"):
        if kinds[0] != kinds[1]:
            raise ExpressionSyntaxError("cannot add a scalar and a vector", text, node.offset)
        return kinds[0]
    if op == "*":
        if kinds == ["vector", "vector"]:
            raise ExpressionSyntaxError("cannot multiply two vectors", text, node.offset)
        return "vector" if "vector" in kinds else "scalar"
    if op == "/":
        if kinds[1] == "vector":
            raise ExpressionSyntaxError("cannot divide by a vector", text, node.offset)
        return kinds[0]
    if op in ("^", "call"):
        if "vector" in kinds:
            raise ExpressionSyntaxError(f"{'powers' if op == '^' else node.value} need scalar arguments",
                                        text, node.offset)
        return "scalar"
    raise AssertionError(op)


def _names(node: _Node) -> set:
    if node.op == "var":
        return {node.value}
    return set().union(*(_names(a) for a in node.args))


def _first(mask) -> tuple:
    mask = np.asarray(mask)
    return tuple(np.argwhere(mask)[0]) if mask.ndim else ()


def _eval(node: _Node, env: dict, shape: tuple):
    op = node.op
    if op == "num":
        return np.full(shape, node.value)
    if op == "var":
        return np.broadcast_to(env[node.value], shape)
    if op == "unit":
        return np.broadcast_to(np.array(_UNIT[node.value]), shape + (3,))
    args = [_eval(a, env, shape) for a in node.args]
    if op == "neg":
        return -args[0]
    a = args[0]
    if op == "call":
        f = node.value
        if f == "sqrt":
            if np.any(a < 0):
                raise ExpressionError("square root of a negative number", _first(a < 0))
            return np.sqrt(a)
        if f == "log":
            if np.any(a <= 0):
                raise ExpressionError("logarithm of a non-positive number", _first(a <= 0))
            return np.log(a)
        if f == "step":
            return np.where(a >= 0, 1.0, 0.0)
        return getattr(np, f)(a)
    b = args[1]
    # scalar operands meeting a vector get a trailing axis
    if a.ndim != b.ndim:
        if a.ndim < b.ndim:
            a = a[..., None]
        else:
            b = b[..., None]
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        # denominators are scalar, possibly carrying the broadcast axis
        zero = np.broadcast_to(b == 0, b.shape)
        if zero.ndim > len(shape):
            zero = zero[..., 0]
        if np.any(zero):
            raise ExpressionError("division by zero", _first(zero))
        return a / b
    if op == "^":
        frac = b != np.round(b)
        bad = (a < 0) & frac
        if np.any(bad):
            raise ExpressionError("fractional power of a negative number", _first(bad))
        zero = (a == 0) & (b < 0)
        if np.any(zero):
            raise ExpressionError("division by zero", _first(zero))
        return np.power(a, b)
    raise AssertionError(op)


class Expression:
    """A parsed expression over a fixed set of variable names."""

    def __init__(self, text: str, variables=("x", "y", "z")):
        self.text = text
        self.variables = tuple(variables)
        self.tree = _Parser(text, variables).parse()
        self.kind = _kind(self.tree, text)
        self.names = _names(self.tree)

    def __repr__(self):
        return f"Expression({self.text!r})"

    def __eq__(self, other):
        return isinstance(other, Expression) and (self.text, self.variables) == (other.text, other.variables)

    def __hash__(self):
        return hash((self.text, self.variables))

    def evaluate(self, **values) -> np.ndarray:
        """Evaluate with arrays bound to the variables (broadcast together)."""
        missing = self.names - set(values)
        if missing:
            raise TypeError(f"missing values for {sorted(missing)}")
        arrays = {k: np.asarray(values[k], dtype=float) for k in self.variables if k in values}
        shape = np.broadcast_shapes(*(a.shape for a in arrays.values())) if arrays else ()
        with np.errstate(all="ignore"):
            return np.array(_eval(self.tree, arrays, shape), dtype=float)


def parse(text: str, variables=("x", "y", "z")) -> Expression:
    return Expression(text, variables)


def _field_eval(expr: Expression, points: np.ndarray):
    try:
        return expr.evaluate(x=points[..., 0], y=points[..., 1], z=points[..., 2])
    except ExpressionError as exc:
        where = Position(*map(float, points[exc.index])) if len(exc.index) == points.ndim - 1 else None
        raise FieldEvaluationError(f"{exc} in {expr.text!r}", where) from None


def scalar_field(text: str) -> ScalarField:
    expr = parse(text)
    if expr.kind != "scalar":
        raise ExpressionSyntaxError("expected a scalar expression", text, 0)
    return ScalarField(lambda p: _field_eval(expr, p), name=text)


def vector_field(text: str) -> VectorField:
    expr = parse(text)
    if expr.kind != "vector":
        raise ExpressionSyntaxError("expected a vector expression (use xhat, yhat, zhat)", text, 0)
    return VectorField(lambda p: _field_eval(expr, p), name=text)
