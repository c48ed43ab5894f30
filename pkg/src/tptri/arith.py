"""Exact scalars, univariate polynomials in ``q``, and a tiny safe expression evaluator.

Scalars are plain :class:`fractions.Fraction` values: they are always kept in
lowest terms with a positive denominator, which is exactly the invariant we
need.  :class:`QPoly` is an immutable polynomial with Fraction coefficients.
"""

from __future__ import annotations

import ast
import operator
from fractions import Fraction
from numbers import Rational

from .errors import SpecError

Scalar = Fraction

__all__ = [
    "Scalar",
    "QPoly",
    "Q",
    "to_scalar",
    "parse_scalar",
    "format_scalar",
    "parse_qpoly",
    "format_qpoly",
    "poly_geq_q",
    "poly_is_nonneg",
    "evaluate_expression",
]


def to_scalar(x) -> Fraction:
    """Coerce ints, Fractions and exact strings to a Fraction. Floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, QPoly) and x.degree <= 0:
        return x.coeff(0)
    raise TypeError(f"cannot convert {x!r} to an exact scalar")


def parse_scalar(text: str) -> Fraction:
    text = text.strip()
    try:
        num, sep, den = text.partition("/")
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecError(f"not an exact scalar: {text!r}") from exc


def format_scalar(x) -> str:
    x = to_scalar(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _strip(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class QPoly:
    """Polynomial in one indeterminate ``q`` with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``; trailing zeros are stripped,
    so the zero polynomial has no coefficients and equality is structural.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, QPoly):
            self._c = coeffs._c
            return
        if not isinstance(coeffs, (list, tuple)):
            coeffs = (coeffs,)
        self._c = _strip(to_scalar(c) for c in coeffs)

    @classmethod
    def coerce(cls, x) -> QPoly:
        return x if isinstance(x, QPoly) else cls((x,))

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self._c) - 1

    def coeff(self, i: int) -> Fraction:
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == QPoly((other,))._c
        return NotImplemented

    def __hash__(self):
        if len(self._c) <= 1:
            return hash(self.coeff(0))
        return hash(self._c)

    def __repr__(self):
        return f"QPoly({format_qpoly(self)!r})"

    def __str__(self):
        return format_qpoly(self)

    def __neg__(self):
        return QPoly(tuple(-c for c in self._c))

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, (QPoly, int, Fraction)):
            return NotImplemented
        other = QPoly.coerce(other)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(tuple(out))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (QPoly, int, Fraction)):
            return NotImplemented
        return self + (-QPoly.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (QPoly, int, Fraction)):
            return NotImplemented
        return QPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly(tuple(c * other for c in self._c))
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return QPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly(tuple(c / other for c in self._c))
        if isinstance(other, QPoly) and other.degree == 0:
            return self / other._c[0]
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = QPoly((1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: QPoly) -> tuple[QPoly, QPoly]:
        """Polynomial long division over the rationals."""
        other = QPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        d = other._c
        lead = d[-1]
        if len(rem) < len(d):
            return QPoly(), self
        quot = [Fraction(0)] * (len(rem) - len(d) + 1)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(d) - 1] / lead
            quot[i] = c
            if c:
                for j, dj in enumerate(d):
                    rem[i + j] -= c * dj
        return QPoly(tuple(quot)), QPoly(tuple(rem))

    def exact_div(self, other: QPoly) -> QPoly:
        quot, rem = self.divmod(other)
        if rem:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return quot

    def __call__(self, x):
        """Evaluate at ``x`` (Horner); works for scalars and polynomials alike."""
        acc = Fraction(0) if not isinstance(x, QPoly) else QPoly()
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def first_negative(self):
        """Index of the first negative coefficient, or None."""
        for i, c in enumerate(self._c):
            if c < 0:
                return i
        return None


Q = QPoly((0, 1))


def poly_is_nonneg(f) -> bool:
    return all(c >= 0 for c in QPoly.coerce(f).coeffs)


def poly_geq_q(f, g) -> bool:
    """Coefficientwise order: ``f >=_q g`` iff ``f - g`` has no negative coefficient."""
    return poly_is_nonneg(QPoly.coerce(f) - QPoly.coerce(g))


def format_qpoly(f) -> str:
    f = QPoly.coerce(f)
    if f.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = format_scalar(mag)
        else:
            power = "q" if i == 1 else f"q^{i}"
            body = power if mag == 1 else f"{format_scalar(mag)}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


def parse_qpoly(text) -> QPoly:
    if isinstance(text, (int, Fraction, QPoly)):
        return QPoly.coerce(text)
    value = evaluate_expression(str(text), {"q": Q})
    return QPoly.coerce(value)


# -- safe arithmetic expressions --------------------------------------------

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}
_FUNCS = {"min": min, "max": max}


def evaluate_expression(text: str, names: dict):
    """Evaluate ``+ - * / ^ **``, integer literals, ``min``/``max`` and the given names.

    Integer literals become Fractions, so ``1/2`` is exact.  ``^`` is accepted
    as a synonym for ``**``.  Anything else (floats, attribute access, other
    calls) is rejected.
    """
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise SpecError(f"cannot parse expression {text!r}") from exc
    return _eval(tree.body, names, text)


def _eval(node, names, text):
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise SpecError(f"only integer literals are allowed in {text!r}")
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        if node.id not in names:
            raise SpecError(f"unknown name {node.id!r} in {text!r}")
        return names[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        value = _eval(node.operand, names, text)
        return -value if isinstance(node.op, ast.USub) else value
    if isinstance(node, ast.BinOp):
        left = _eval(node.left, names, text)
        right = _eval(node.right, names, text)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(right, Fraction) and right.denominator == 1 and right >= 0):
                raise SpecError(f"exponent must be a nonnegative integer in {text!r}")
            return left ** int(right)
        op = _BINOPS.get(type(node.op))
        if op is None:
            raise SpecError(f"operator not allowed in {text!r}")
        try:
            result = op(left, right)
        except ZeroDivisionError as exc:
            raise SpecError(f"division by zero in {text!r}") from exc
        if result is NotImplemented:
            raise SpecError(f"unsupported operands in {text!r}")
        return result
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
        fn = _FUNCS.get(node.func.id)
        if fn is None or node.keywords or not node.args:
            raise SpecError(f"call not allowed in {text!r}")
        return fn(_eval(a, names, text) for a in node.args)
    raise SpecError(f"unsupported syntax in {text!r}")
