"""Recursive triangles over polynomials in ``q`` and coefficientwise total positivity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .arith import QPoly, format_qpoly, poly_geq_q, poly_is_nonneg, to_scalar
from .certify import CriterionResult, Failure, TPReport, _scan
from .errors import NegativePolyCoefficient, SpecError, UnknownCriterion
from .triangles import CoefficientSpec, LowerTriangle, make_sequence

__all__ = [
    "QCoefficientSpec",
    "QLowerTriangle",
    "build_q_recursive",
    "is_q_tp",
    "check_q_criterion",
    "Q_CRITERIA",
    "Q_CATALOG",
]


@dataclass(frozen=True)
class QCoefficientSpec:
    """Polynomial coefficient sequences; every value must have nonnegative coefficients."""

    r: Callable
    s: Callable
    t: Callable
    name: str = "custom"

    @classmethod
    def of(cls, r, s, t, name="custom"):
        return cls(
            r=make_sequence(r, start=1, poly=True),
            s=make_sequence(s, start=0, poly=True),
            t=make_sequence(t, start=1, poly=True),
            name=name,
        )

    @classmethod
    def from_numeric(cls, spec: CoefficientSpec):
        """Constant polynomials carrying the values of a numeric spec."""
        return cls(
            r=lambda k: QPoly.coerce(spec.rk(k)),
            s=lambda k: QPoly.coerce(spec.sk(k)),
            t=lambda k: QPoly.coerce(spec.tk(k)),
            name=spec.name,
        )

    def _get(self, which, k, lowest):
        if k < lowest:
            raise SpecError(f"{which}_k is defined for k >= {lowest}, got k = {k}")
        value = QPoly.coerce(getattr(self, which)(k))
        if not poly_is_nonneg(value):
            raise NegativePolyCoefficient(which, k, format_qpoly(value))
        return value

    def rk(self, k):
        return self._get("r", k, 1)

    def sk(self, k):
        return self._get("s", k, 0)

    def tk(self, k):
        return self._get("t", k, 1)

    def specialize(self, q0) -> CoefficientSpec:
        """Numeric spec obtained by evaluating every coefficient at ``q = q0``."""
        q0 = to_scalar(q0)
        return CoefficientSpec(
            r=lambda k: self.rk(k)(q0),
            s=lambda k: self.sk(k)(q0),
            t=lambda k: self.tk(k)(q0),
            name=f"{self.name}@q={q0}",
        )


class QLowerTriangle(LowerTriangle):
    """Lower triangle with QPoly entries."""

    def evaluate(self, q0) -> LowerTriangle:
        q0 = to_scalar(q0)
        rows = tuple(tuple(p(q0) for p in row) for row in self.rows)
        return LowerTriangle(rows, self.index_origin, self.name)


def build_q_recursive(spec: QCoefficientSpec, N: int) -> QLowerTriangle:
    """Rows ``0..N`` of the polynomial triangle, built exactly as the numeric one."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    rows = [(QPoly((1,)),)]
    for n in range(N):
        prev = rows[-1]
        new = []
        for k in range(n + 2):
            v = QPoly()
            if k >= 1:
                v = v + spec.rk(k) * prev[k - 1]
            if k <= n:
                v = v + spec.sk(k) * prev[k]
            if k + 1 <= n:
                v = v + spec.tk(k + 1) * prev[k + 1]
            new.append(v)
        rows.append(tuple(new))
    return QLowerTriangle(tuple(rows), 0, spec.name)


def is_q_tp(M, r, *, workers=None) -> TPReport:
    """Every minor of order ``<= r`` has nonnegative coefficients as a polynomial in q.

    A failing report's witness holds the offending polynomial and the index of
    its first negative coefficient.
    """
    return _scan(M, r, workers, poly_expected=True)


def _geq_pairs(spec, which, N):
    one = QPoly((1,))
    if which == "i":
        yield 0, spec.sk(0), spec.rk(1), "s_0 >=_q r_1"
        for k in range(1, N + 1):
            yield k, spec.sk(k), spec.rk(k + 1) + spec.tk(k), f"s_{k} >=_q r_{k+1} + t_{k}"
    elif which == "ii":
        yield 0, spec.sk(0), spec.tk(1), "s_0 >=_q t_1"
        for k in range(1, N + 1):
            yield k, spec.sk(k), spec.rk(k) + spec.tk(k + 1), f"s_{k} >=_q r_{k} + t_{k+1}"
    else:
        yield 0, spec.sk(0), one, "s_0 >=_q 1"
        for k in range(1, N + 1):
            yield k, spec.sk(k), spec.rk(k) * spec.tk(k) + one, f"s_{k} >=_q r_{k}*t_{k} + 1"


Q_CRITERIA = {
    "i": "s_0 >=_q r_1 and s_k >=_q r_{k+1} + t_k",
    "ii": "s_0 >=_q t_1 and s_k >=_q r_k + t_{k+1}",
    "iii": "s_0 >=_q 1 and s_k >=_q r_k t_k + 1",
}


def check_q_criterion(spec: QCoefficientSpec, which: str, N: int) -> CriterionResult:
    """Coefficientwise version of the row-sum, column-sum and product-plus-one conditions."""
    if which not in Q_CRITERIA:
        raise UnknownCriterion(f"unknown q-criterion {which!r}; known: {', '.join(Q_CRITERIA)}")
    if N < 1:
        raise ValueError("criteria are checked for N >= 1")
    for k, lhs, rhs, label in _geq_pairs(spec, which, N):
        if not poly_geq_q(lhs, rhs):
            text = f"k={k}: {label} fails, difference is {format_qpoly(lhs - rhs)}"
            return CriterionResult(f"q-{which}", False, Failure(k, text))
    return CriterionResult(f"q-{which}", True)


# numeric criteria these reduce to for constant polynomials
Q_TO_NUMERIC = {"i": "thm-2.8-i", "ii": "thm-2.8-ii", "iii": "thm-2.9"}


Q_CATALOG = {
    "q-catalan": QCoefficientSpec.of(r=1, s="min(k, 1)*q + 1", t="q", name="q-catalan"),
    "q-shapiro": QCoefficientSpec.of(r=1, s="1 + q", t="q", name="q-shapiro"),
}
