"""Recursive triangles built from tridiagonal coefficient data.

A :class:`CoefficientSpec` holds three sequences ``r`` (k >= 1), ``s`` (k >= 0)
and ``t`` (k >= 1).  The triangle they generate starts at ``a[0][0] = 1`` and
each row is obtained from the previous one by

    a[n+1][k] = r_k a[n][k-1] + s_k a[n][k] + t_{k+1} a[n][k+1]

with entries outside ``0 <= k <= n`` treated as zero.  Equivalently the matrix
with row 0 removed equals ``A @ J`` where ``J`` is the tridiagonal coefficient
matrix with diagonal ``s``, superdiagonal ``r`` and subdiagonal ``t``.

Triangles whose coefficients depend on both ``n`` and ``k`` (Eulerian,
Narayana) are described by :class:`GeneralRecurrenceSpec` instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Optional

import numpy as np

from .arith import QPoly, evaluate_expression, to_scalar, Q
from .errors import ClosedFormMismatch, NegativeCoefficient, SpecError

__all__ = [
    "ExplicitSequence",
    "AffineSequence",
    "ExpressionSequence",
    "make_sequence",
    "CoefficientSpec",
    "GeneralRecurrenceSpec",
    "LowerTriangle",
    "TriMatrix",
    "build_recursive",
    "build_general",
    "coefficient_matrix",
    "catalan_like",
    "verify_factorization",
    "object_matrix",
    "CATALOG",
    "get_spec",
]


# -- sequence generators ----------------------------------------------------

class ExplicitSequence:
    """Finite list of values; ``values[0]`` is the term at index ``start``."""

    def __init__(self, values, start=0, poly=False):
        conv = QPoly.coerce if poly else to_scalar
        self.values = tuple(conv(v) for v in values)
        self.start = start

    def __call__(self, k):
        i = k - self.start
        if not 0 <= i < len(self.values):
            raise SpecError(
                f"explicit sequence has indices {self.start}..{self.start + len(self.values) - 1}, "
                f"index {k} requested"
            )
        return self.values[i]

    def __repr__(self):
        return f"ExplicitSequence({list(self.values)!r}, start={self.start})"


class AffineSequence:
    """``slope * k + intercept``."""

    def __init__(self, slope=0, intercept=0):
        self.slope = to_scalar(slope)
        self.intercept = to_scalar(intercept)

    def __call__(self, k):
        return self.slope * k + self.intercept

    def __repr__(self):
        return f"AffineSequence({self.slope}, {self.intercept})"


class ExpressionSequence:
    """Arithmetic expression in ``k`` (and ``q`` when ``poly`` is set), e.g. ``"k + 1"``."""

    def __init__(self, text, poly=False):
        self.text = text
        self.poly = poly
        self(1)  # parse errors surface at construction

    def __call__(self, k):
        names = {"k": Fraction(k)}
        if self.poly:
            names["q"] = Q
            return QPoly.coerce(evaluate_expression(self.text, names))
        value = evaluate_expression(self.text, names)
        if isinstance(value, QPoly):
            raise SpecError(f"expression {self.text!r} is not a scalar")
        return value

    def __repr__(self):
        return f"ExpressionSequence({self.text!r})"


def make_sequence(obj, start=0, poly=False):
    """Turn a list, number, expression string, ``{slope, intercept}`` mapping or callable into a generator."""
    if isinstance(obj, (ExplicitSequence, AffineSequence, ExpressionSequence)):
        return obj
    if isinstance(obj, (list, tuple)):
        return ExplicitSequence(obj, start=start, poly=poly)
    if isinstance(obj, str):
        return ExpressionSequence(obj, poly=poly)
    if isinstance(obj, dict):
        unknown = set(obj) - {"slope", "intercept"}
        if unknown:
            raise SpecError(f"affine sequence has unknown keys {sorted(unknown)}")
        return AffineSequence(obj.get("slope", 0), obj.get("intercept", 0))
    if isinstance(obj, (int, Fraction)) and not isinstance(obj, bool):
        c = QPoly.coerce(obj) if poly else to_scalar(obj)
        return lambda k: c
    if isinstance(obj, QPoly):
        return lambda k: obj
    if callable(obj):
        return obj
    raise SpecError(f"cannot build a sequence from {obj!r}")


# -- specs ------------------------------------------------------------------

@dataclass(frozen=True)
class CoefficientSpec:
    """The three coefficient sequences of a recursive triangle.

    Values are checked for nonnegativity each time they are read.
    """

    r: Callable
    s: Callable
    t: Callable
    name: str = "custom"
    golden: Optional[tuple] = None

    @classmethod
    def of(cls, r, s, t, name="custom", golden=None):
        """Build from anything :func:`make_sequence` accepts (lists for r, t start at k=1)."""
        return cls(
            r=make_sequence(r, start=1),
            s=make_sequence(s, start=0),
            t=make_sequence(t, start=1),
            name=name,
            golden=None if golden is None else tuple(tuple(to_scalar(x) for x in row) for row in golden),
        )

    def _get(self, which, k, lowest):
        if k < lowest:
            raise SpecError(f"{which}_k is defined for k >= {lowest}, got k = {k}")
        value = to_scalar(getattr(self, which)(k))
        if value < 0:
            raise NegativeCoefficient(which, k, value)
        return value

    def rk(self, k):
        return self._get("r", k, 1)

    def sk(self, k):
        return self._get("s", k, 0)

    def tk(self, k):
        return self._get("t", k, 1)


@dataclass(frozen=True)
class GeneralRecurrenceSpec:
    """Recurrence with ``(n, k)``-dependent coefficients.

    ``coeff(n, k)`` returns ``(u, v, w)`` so that
    ``entry(n+1, k) = u*entry(n, k-1) + v*entry(n, k) + w*entry(n, k+1)``,
    or None where the recurrence is not defined.  Indices follow
    ``index_origin``.  When ``closed_form`` is given it supplies values where
    ``coeff`` is None and is cross-checked everywhere else.
    """

    coeff: Callable
    base: Fraction = Fraction(1)
    index_origin: int = 0
    closed_form: Optional[Callable] = None
    name: str = "custom"
    golden: Optional[tuple] = None


# -- finite matrices --------------------------------------------------------

def object_matrix(rows, shape=None):
    """Build a numpy object array from nested rows without numpy peeking inside entries."""
    rows = [list(r) for r in rows]
    if shape is None:
        shape = (len(rows), max((len(r) for r in rows), default=0))
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = x
    return out


@dataclass(frozen=True)
class LowerTriangle:
    """Leading truncation of a lower triangular matrix.

    ``rows[i]`` holds the entries of row ``index_origin + i`` in columns
    ``index_origin .. index_origin + i``.  ``order`` is the last row index,
    so a 0-indexed triangle of order N has N+1 rows.
    """

    rows: tuple
    index_origin: int = 0
    name: str = "custom"

    @property
    def order(self) -> int:
        return self.index_origin + len(self.rows) - 1

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, n, k):
        """Entry at row ``n``, column ``k`` in the triangle's own index convention."""
        i, j = n - self.index_origin, k - self.index_origin
        if 0 <= j <= i < len(self.rows):
            return self.rows[i][j]
        return self._zero()

    def _zero(self):
        return QPoly() if self.rows and isinstance(self.rows[0][0], QPoly) else Fraction(0)

    def column(self, k):
        return tuple(self.entry(n, k) for n in range(self.index_origin, self.order + 1))

    def to_array(self):
        """Square ``size x size`` object array, zeros above the diagonal."""
        m = object_matrix(self.rows, (self.size, self.size))
        if self.rows and isinstance(self.rows[0][0], QPoly):
            for i in range(self.size):
                for j in range(i + 1, self.size):
                    m[i, j] = QPoly()
        return m

    def tolist(self):
        return [list(row) for row in self.rows]


@dataclass(frozen=True)
class TriMatrix:
    """Tridiagonal matrix with diagonal ``y_0..y_n``, superdiagonal ``x_1..x_n``, subdiagonal ``z_1..z_n``.

    ``x_k`` sits at position ``(k-1, k)`` and ``z_k`` at ``(k, k-1)``.
    """

    diag: tuple
    sup: tuple = ()
    sub: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(to_scalar(x) for x in self.diag))
        object.__setattr__(self, "sup", tuple(to_scalar(x) for x in self.sup))
        object.__setattr__(self, "sub", tuple(to_scalar(x) for x in self.sub))
        if not self.diag:
            raise ValueError("a tridiagonal matrix needs at least one diagonal entry")
        n = len(self.diag) - 1
        if len(self.sup) != n or len(self.sub) != n:
            raise ValueError(
                f"bands must have lengths {n + 1}, {n}, {n}; got "
                f"{len(self.diag)}, {len(self.sup)}, {len(self.sub)}"
            )

    @property
    def order(self) -> int:
        return len(self.diag) - 1

    def block(self, i, j):
        """Contiguous principal submatrix on indices ``i..j`` inclusive."""
        return TriMatrix(self.diag[i:j + 1], self.sup[i:j], self.sub[i:j])

    def transpose(self):
        return TriMatrix(self.diag, self.sub, self.sup)

    def to_array(self):
        n = len(self.diag)
        m = object_matrix([], (n, n))
        for i, y in enumerate(self.diag):
            m[i, i] = y
        for k, x in enumerate(self.sup, start=1):
            m[k - 1, k] = x
        for k, z in enumerate(self.sub, start=1):
            m[k, k - 1] = z
        return m


# -- construction -----------------------------------------------------------

def build_recursive(spec: CoefficientSpec, N: int) -> LowerTriangle:
    """Rows ``0..N`` of the triangle generated by ``spec``."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    rows = [(Fraction(1),)]
    for n in range(N):
        prev = rows[-1]
        new = []
        for k in range(n + 2):
            v = Fraction(0)
            if k >= 1:
                v += spec.rk(k) * prev[k - 1]
            if k <= n:
                v += spec.sk(k) * prev[k]
            if k + 1 <= n:
                v += spec.tk(k + 1) * prev[k + 1]
            new.append(v)
        rows.append(tuple(new))
    return LowerTriangle(tuple(rows), 0, spec.name)


def build_general(spec: GeneralRecurrenceSpec, N: int) -> LowerTriangle:
    """Rows ``index_origin..N`` of a triangle with ``(n, k)``-dependent coefficients."""
    o = spec.index_origin
    if N < o:
        raise ValueError(f"order must be at least the index origin {o}")
    base = to_scalar(spec.base)
    if spec.closed_form is not None:
        cf = to_scalar(spec.closed_form(o, o))
        if cf != base:
            raise ClosedFormMismatch(o, o, base, cf)
    rows = [(base,)]
    for n in range(o, N):
        prev = rows[-1]

        def old(k):
            j = k - o
            return prev[j] if 0 <= j < len(prev) else Fraction(0)

        new = []
        for k in range(o, n + 2):
            value = None
            coeffs = spec.coeff(n, k)
            if coeffs is not None:
                u, v, w = (to_scalar(c) for c in coeffs)
                for label, c in zip("uvw", (u, v, w)):
                    if c < 0:
                        raise NegativeCoefficient(label, (n, k), c)
                value = u * old(k - 1) + v * old(k) + w * old(k + 1)
            if spec.closed_form is not None:
                closed = to_scalar(spec.closed_form(n + 1, k))
                if value is not None and value != closed:
                    raise ClosedFormMismatch(n + 1, k, value, closed)
                value = closed
            if value is None:
                raise SpecError(f"recurrence undefined at ({n + 1}, {k}) and no closed form given")
            new.append(value)
        rows.append(tuple(new))
    return LowerTriangle(tuple(rows), o, spec.name)


def coefficient_matrix(spec: CoefficientSpec, n: int) -> TriMatrix:
    """Leading ``(n+1) x (n+1)`` block of the tridiagonal coefficient matrix."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    return TriMatrix(
        diag=tuple(spec.sk(k) for k in range(n + 1)),
        sup=tuple(spec.rk(k) for k in range(1, n + 1)),
        sub=tuple(spec.tk(k) for k in range(1, n + 1)),
    )


def catalan_like(spec: CoefficientSpec, N: int) -> tuple:
    """First column ``a[0][0], ..., a[N][0]``."""
    return build_recursive(spec, N).column(0)


def verify_factorization(spec: CoefficientSpec, N: int) -> bool:
    """Check rows ``1..N`` (columns ``0..N-1``) of the triangle equal ``A_{N-1} @ J_{N-1}``."""
    if N < 1:
        raise ValueError("factorization needs N >= 1")
    A = build_recursive(spec, N).to_array()
    J = coefficient_matrix(spec, N - 1).to_array()
    lhs = A[1:N + 1, 0:N]
    rhs = A[0:N, 0:N] @ J
    return bool(np.all(lhs == rhs))


# -- catalog ----------------------------------------------------------------

def _eulerian_coeff(n, k):
    return (n - k + 2, k, 0)


def _eulerian_closed(n, k):
    return sum((-1) ** j * comb(n + 1, j) * (k - j) ** n for j in range(k + 1))


def _narayana_coeff(n, k):
    # the published recurrence only covers interior columns of row n+1
    if k < 2 or k > n:
        return None
    m = Fraction(n * (n + 1))
    return (m / (2 * k * (k - 1)), m / (2 * (n - k + 1) * (n - k + 2)), 0)


def _narayana_closed(n, k):
    return Fraction(comb(n - 1, k - 1) * comb(n, k - 1), k)


def _golden(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


CATALOG = {
    "pascal": CoefficientSpec.of(
        r=1, s=1, t=0, name="pascal",
        golden=[[1], [1, 1], [1, 2, 1], [1, 3, 3, 1], [1, 4, 6, 4, 1]],
    ),
    # s_k = k + 1 gives the 0-indexed table a(n, k) = S(n+1, k+1)
    "stirling2": CoefficientSpec.of(
        r=1, s="k + 1", t=0, name="stirling2",
        golden=[[1], [1, 1], [1, 3, 1], [1, 7, 6, 1], [1, 15, 25, 10, 1]],
    ),
    "aigner-catalan": CoefficientSpec.of(
        r=1, s="min(k + 1, 2)", t=1, name="aigner-catalan",
        golden=[[1], [1, 1], [2, 3, 1], [5, 9, 5, 1], [14, 28, 20, 7, 1]],
    ),
    "shapiro-catalan": CoefficientSpec.of(
        r=1, s=2, t=1, name="shapiro-catalan",
        golden=[[1], [2, 1], [5, 4, 1], [14, 14, 6, 1], [42, 48, 27, 8, 1]],
    ),
    "bell": CoefficientSpec.of(
        r=1, s="k + 1", t="k", name="bell",
        golden=[[1], [1, 1], [2, 3, 1], [5, 10, 6, 1], [15, 37, 31, 10, 1]],
    ),
    "eulerian": GeneralRecurrenceSpec(
        coeff=_eulerian_coeff, index_origin=1, closed_form=_eulerian_closed, name="eulerian",
        golden=_golden([[1], [1, 1], [1, 4, 1], [1, 11, 11, 1], [1, 26, 66, 26, 1]]),
    ),
    "narayana": GeneralRecurrenceSpec(
        coeff=_narayana_coeff, index_origin=1, closed_form=_narayana_closed, name="narayana",
        golden=_golden([[1], [1, 1], [1, 3, 1], [1, 6, 6, 1], [1, 10, 20, 10, 1]]),
    ),
}


def get_spec(name: str):
    try:
        return CATALOG[name]
    except KeyError:
        raise SpecError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG)}") from None


def build(spec, N: int) -> LowerTriangle:
    """Dispatch to :func:`build_recursive` or :func:`build_general`."""
    if isinstance(spec, GeneralRecurrenceSpec):
        return build_general(spec, N)
    return build_recursive(spec, N)
