"""Total positivity certificates, sufficient-condition checks and sequence tests.

All checks are exact.  A failed certificate always carries the canonical
witness: the first negative minor in the order (minor size, row set, column
set), each compared lexicographically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Optional, Union

from . import _kernels
from .arith import QPoly, format_qpoly, format_scalar, parse_qpoly, parse_scalar, to_scalar
from .errors import (
    IndexOutOfRange,
    InsufficientLength,
    NegativeTerm,
    NotNonnegative,
    UnknownCriterion,
)
from .triangles import CoefficientSpec, TriMatrix, coefficient_matrix, object_matrix

__all__ = [
    "Witness",
    "TPReport",
    "Failure",
    "CriterionResult",
    "minor",
    "det",
    "is_tp_r",
    "tridiag_det",
    "tridiag_is_tp",
    "CRITERIA",
    "check_criterion",
    "check_diagonal_dominance",
    "toeplitz",
    "hankel",
    "is_log_convex",
    "is_log_concave",
    "is_pf_r",
]


# -- reports ----------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    rows: tuple
    cols: tuple
    value: Union[Fraction, QPoly]
    # index of the first negative coefficient when value is a polynomial
    negative_coefficient: Optional[int] = None

    def to_dict(self):
        d = {"rows": list(self.rows), "cols": list(self.cols)}
        if isinstance(self.value, QPoly):
            d["value"] = format_qpoly(self.value)
            d["negative_coefficient"] = self.negative_coefficient
        else:
            d["value"] = format_scalar(self.value)
        return d

    @classmethod
    def from_dict(cls, d):
        if "negative_coefficient" in d:
            return cls(tuple(d["rows"]), tuple(d["cols"]), parse_qpoly(d["value"]),
                       d["negative_coefficient"])
        return cls(tuple(d["rows"]), tuple(d["cols"]), parse_scalar(d["value"]))


@dataclass(frozen=True)
class TPReport:
    """Outcome of a TP_r scan; ``order_checked`` is an int or ``"all"``."""

    verified: bool
    order_checked: Union[int, str]
    witness: Optional[Witness]
    minors_evaluated: int

    def __post_init__(self):
        if self.verified == (self.witness is not None):
            raise ValueError("a witness is present exactly when verification fails")

    def to_dict(self):
        return {
            "verified": self.verified,
            "order_checked": self.order_checked,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "minors_evaluated": self.minors_evaluated,
        }

    @classmethod
    def from_dict(cls, d):
        w = d.get("witness")
        return cls(d["verified"], d["order_checked"],
                   None if w is None else Witness.from_dict(w), d["minors_evaluated"])

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Failure:
    index: int
    text: str


@dataclass(frozen=True)
class CriterionResult:
    criterion: str
    holds: bool
    first_failure: Optional[Failure] = None

    def __post_init__(self):
        if self.holds == (self.first_failure is not None):
            raise ValueError("first_failure is present exactly when the criterion fails")

    def to_dict(self):
        f = self.first_failure
        return {
            "criterion": self.criterion,
            "holds": self.holds,
            "first_failure": None if f is None else {"index": f.index, "text": f.text},
        }

    @classmethod
    def from_dict(cls, d):
        f = d.get("first_failure")
        return cls(d["criterion"], d["holds"], None if f is None else Failure(f["index"], f["text"]))

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


# -- matrices and minors ----------------------------------------------------

def _rows_of(M):
    """Nested lists of Fraction or QPoly from a numpy array, TriMatrix, or nested sequence."""
    if isinstance(M, TriMatrix):
        M = M.to_array()
    if hasattr(M, "tolist") and not isinstance(M, list):
        M = M.tolist()
    rows = [list(r) for r in M]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix rows must all have the same length")
    poly = any(isinstance(x, QPoly) for r in rows for x in r)
    conv = QPoly.coerce if poly else to_scalar
    return [[conv(x) for x in r] for r in rows], poly


def _check_index_set(idx, bound, what):
    idx = tuple(int(i) for i in idx)
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise IndexOutOfRange(f"{what} {idx} must be strictly increasing")
    if idx and (idx[0] < 0 or idx[-1] >= bound):
        raise IndexOutOfRange(f"{what} {idx} out of range 0..{bound - 1}")
    return idx


def _exact_det(rows):
    """Exact determinant of a square list-of-lists of Fraction or QPoly."""
    if not rows:
        return Fraction(1)
    if any(isinstance(x, QPoly) for r in rows for x in r):
        ints, scales = _kernels.scale_rows_ipoly(rows)
        return QPoly(_kernels.det_ipoly(ints)) / prod(scales)
    ints, scales = _kernels.scale_rows_int(rows)
    return Fraction(_kernels.det_int(ints), prod(scales))


def minor(M, rows, cols):
    """Exact determinant of the submatrix of ``M`` on ``rows`` x ``cols``."""
    data, _ = _rows_of(M)
    nrows = len(data)
    ncols = len(data[0]) if data else 0
    rows = _check_index_set(rows, nrows, "row set")
    cols = _check_index_set(cols, ncols, "column set")
    if len(rows) != len(cols):
        raise IndexOutOfRange("row and column sets must have equal size")
    return _exact_det([[data[i][j] for j in cols] for i in rows])


def det(M):
    data, _ = _rows_of(M)
    if data and len(data) != len(data[0]):
        raise ValueError("determinant needs a square matrix")
    return _exact_det(data)


def _scan(M, r, workers, poly_expected=None):
    if r != "all" and (not isinstance(r, int) or r < 1):
        raise ValueError(f"TP order must be a positive integer or 'all', got {r!r}")
    data, poly = _rows_of(M)
    if poly_expected:
        poly = True
        data = [[QPoly.coerce(x) for x in row] for row in data]
    if not data or not data[0]:
        return TPReport(True, r, None, 0)
    top = max(len(data), len(data[0])) if r == "all" else r
    if poly:
        ints, scales = _kernels.scale_rows_ipoly(data)
        kind = "poly"
    else:
        ints, scales = _kernels.scale_rows_int(data)
        kind = "int"
    count, found = _kernels.enumerate_minors(ints, kind, top, workers)
    if found is None:
        return TPReport(True, r, None, count)
    rows, cols, _ = found
    value = _exact_det([[data[i][j] for j in cols] for i in rows])
    neg = value.first_negative() if poly else None
    return TPReport(False, r, Witness(tuple(rows), tuple(cols), value, neg), count)


def is_tp_r(M, r, *, workers=None) -> TPReport:
    """Check every minor of order ``<= r`` (``r="all"`` for every order) is nonnegative.

    Minors are scanned in canonical order and the scan stops at the first
    negative one.  ``workers > 1`` splits each order across processes; the
    result is identical to the sequential scan.
    """
    return _scan(M, r, workers)


# -- tridiagonal fast paths -------------------------------------------------

def tridiag_det(J: TriMatrix):
    """Determinant by the three-term recurrence ``D_n = y_n D_{n-1} - x_n z_n D_{n-2}``."""
    d_prev, d = Fraction(1), J.diag[0]
    for n in range(1, len(J.diag)):
        d_prev, d = d, J.diag[n] * d - J.sup[n - 1] * J.sub[n - 1] * d_prev
    return d


def tridiag_is_tp(J: TriMatrix) -> TPReport:
    """TP test for a nonnegative tridiagonal matrix via its contiguous principal minors.

    For nonnegative tridiagonal matrices, total positivity is equivalent to
    nonnegativity of the determinants of all blocks ``J[i..j]``, which costs
    O(n^2) arithmetic instead of exponentially many minors.
    """
    bands = J.diag + J.sup + J.sub
    if any(x < 0 for x in bands):
        raise NotNonnegative("tridiagonal TP test requires nonnegative bands")
    size = len(J.diag)
    # dets[i][m] = determinant of the block starting at i with m+1 rows
    dets = []
    for i in range(size):
        row = []
        d_prev, d = Fraction(1), J.diag[i]
        row.append(d)
        for n in range(i + 1, size):
            d_prev, d = d, J.diag[n] * d - J.sup[n - 1] * J.sub[n - 1] * d_prev
            row.append(d)
        dets.append(row)
    count = 0
    for m in range(size):
        for i in range(size - m):
            count += 1
            value = dets[i][m]
            if value < 0:
                idx = tuple(range(i, i + m + 1))
                return TPReport(False, "all", Witness(idx, idx, value), count)
    return TPReport(True, "all", None, count)


# -- sufficient conditions --------------------------------------------------

def check_diagonal_dominance(J: TriMatrix, side: str = "row") -> CriterionResult:
    """Weak diagonal dominance of a tridiagonal matrix by rows or by columns."""
    if side == "row":
        name, M = "lemma-2.7-row", J
    elif side in ("column", "col"):
        name, M, side = "lemma-2.7-col", J.transpose(), "column"
    else:
        raise ValueError("side must be 'row' or 'column'")
    n = M.order
    for i in range(n + 1):
        left = abs(M.sub[i - 1]) if i >= 1 else Fraction(0)
        right = abs(M.sup[i]) if i < n else Fraction(0)
        if M.diag[i] < left + right:
            text = (f"{side} {i}: {format_scalar(M.diag[i])} < "
                    f"{format_scalar(left)} + {format_scalar(right)}")
            return CriterionResult(name, False, Failure(i, text))
    return CriterionResult(name, True)


def _scan_inequalities(name, pairs):
    for k, lhs, rhs, text in pairs:
        if lhs < rhs:
            return CriterionResult(name, False, Failure(k, text(lhs, rhs)))
    return CriterionResult(name, True)


def _fmt(x):
    return format_scalar(x)


def _log_convex_products(spec, N):
    for k in range(1, N + 1):
        yield (k, spec.sk(k - 1) * spec.sk(k), spec.rk(k) * spec.tk(k),
               lambda a, b, k=k: f"k={k}: s_{k-1}*s_{k} = {_fmt(a)} < r_{k}*t_{k} = {_fmt(b)}")


def _bidiagonal(spec, N):
    for k in range(1, N + 1):
        yield (k, Fraction(0), spec.tk(k),
               lambda a, b, k=k: f"k={k}: t_{k} = {_fmt(b)} is not zero")


def _row_sums(spec, N):
    yield (0, spec.sk(0), spec.rk(1), lambda a, b: f"k=0: s_0 = {_fmt(a)} < r_1 = {_fmt(b)}")
    for k in range(1, N + 1):
        yield (k, spec.sk(k), spec.rk(k + 1) + spec.tk(k),
               lambda a, b, k=k: f"k={k}: s_{k} = {_fmt(a)} < r_{k+1} + t_{k} = {_fmt(b)}")


def _column_sums(spec, N):
    yield (0, spec.sk(0), spec.tk(1), lambda a, b: f"k=0: s_0 = {_fmt(a)} < t_1 = {_fmt(b)}")
    for k in range(1, N + 1):
        yield (k, spec.sk(k), spec.rk(k) + spec.tk(k + 1),
               lambda a, b, k=k: f"k={k}: s_{k} = {_fmt(a)} < r_{k} + t_{k+1} = {_fmt(b)}")


def _product_plus_one(spec, N):
    yield (0, spec.sk(0), Fraction(1), lambda a, b: f"k=0: s_0 = {_fmt(a)} < 1")
    for k in range(1, N + 1):
        yield (k, spec.sk(k), spec.rk(k) * spec.tk(k) + 1,
               lambda a, b, k=k: f"k={k}: s_{k} = {_fmt(a)} < r_{k}*t_{k} + 1 = {_fmt(b)}")


CRITERIA = {
    "cor-2.4": ("consecutive diagonal products dominate off-diagonal products "
                "(Catalan-like numbers log-convex)", _log_convex_products),
    "cor-2.5": ("subdiagonal vanishes (bidiagonal coefficient matrix, triangle TP)", _bidiagonal),
    "lemma-2.7-row": ("coefficient matrix truncation is row diagonally dominant", None),
    "lemma-2.7-col": ("coefficient matrix truncation is column diagonally dominant", None),
    "thm-2.8-i": ("s_0 >= r_1 and s_k >= r_{k+1} + t_k (triangle TP)", _row_sums),
    "thm-2.8-ii": ("s_0 >= t_1 and s_k >= r_k + t_{k+1} (triangle TP)", _column_sums),
    "thm-2.9": ("s_0 >= 1 and s_k >= r_k t_k + 1 (triangle TP)", _product_plus_one),
}

# descriptive names accepted wherever a criterion id is
CRITERION_ALIASES = {
    "log-convex": "cor-2.4",
    "bidiagonal": "cor-2.5",
    "row-dominant": "lemma-2.7-row",
    "column-dominant": "lemma-2.7-col",
    "row-sums": "thm-2.8-i",
    "column-sums": "thm-2.8-ii",
    "product-plus-one": "thm-2.9",
}


def resolve_criterion(which: str) -> str:
    which = CRITERION_ALIASES.get(which, which)
    if which not in CRITERIA:
        raise UnknownCriterion(f"unknown criterion {which!r}; known: {', '.join(CRITERIA)}")
    return which


def check_criterion(spec: CoefficientSpec, which: str, N: int) -> CriterionResult:
    """Evaluate one sufficient-condition family for indices ``k <= N``."""
    which = resolve_criterion(which)
    if N < 1:
        raise ValueError("criteria are checked for N >= 1")
    if which == "lemma-2.7-row":
        return check_diagonal_dominance(coefficient_matrix(spec, N), "row")
    if which == "lemma-2.7-col":
        return check_diagonal_dominance(coefficient_matrix(spec, N), "column")
    return _scan_inequalities(which, CRITERIA[which][1](spec, N))


# -- sequences --------------------------------------------------------------

def _scalars(a):
    return [to_scalar(x) for x in a]


def toeplitz(a, N: int):
    """``(N+1) x (N+1)`` matrix with entry ``(i, j) = a[i - j]`` (zero above the diagonal and past the end)."""
    a = _scalars(a)
    return object_matrix(
        [[a[i - j] if 0 <= i - j < len(a) else Fraction(0) for j in range(N + 1)]
         for i in range(N + 1)]
    )


def hankel(a, N: int):
    """``(N+1) x (N+1)`` matrix with entry ``(i, j) = a[i + j]``."""
    a = _scalars(a)
    if len(a) < 2 * N + 1:
        raise InsufficientLength(f"Hankel matrix of order {N} needs {2 * N + 1} terms, got {len(a)}")
    return object_matrix([[a[i + j] for j in range(N + 1)] for i in range(N + 1)])


def _nonneg(a):
    a = _scalars(a)
    for i, x in enumerate(a):
        if x < 0:
            raise NegativeTerm(f"term {i} = {x} is negative")
    return a


def is_log_convex(a) -> bool:
    """``a_i a_{j+1} >= a_{i+1} a_j`` for all ``i < j``.

    For positive terms the adjacent triples decide it.  With zero terms the
    ratio argument breaks, so the full pairwise condition is checked as the
    TP_2 property of the two-column matrix ``[a_i, a_{i+1}]``.
    """
    a = _nonneg(a)
    if all(x > 0 for x in a):
        return all(a[n] * a[n + 2] >= a[n + 1] ** 2 for n in range(len(a) - 2))
    pairs = [[a[i], a[i + 1]] for i in range(len(a) - 1)]
    return len(pairs) < 2 or is_tp_r(pairs, 2).verified


def is_log_concave(a) -> bool:
    """``a_i a_{j+1} <= a_{i+1} a_j`` for all ``i < j``."""
    a = _nonneg(a)
    if all(x > 0 for x in a):
        return all(a[n] * a[n + 2] <= a[n + 1] ** 2 for n in range(len(a) - 2))
    pairs = [[a[i + 1], a[i]] for i in range(len(a) - 1)]
    return len(pairs) < 2 or is_tp_r(pairs, 2).verified


def is_pf_r(a, r: int, N: int, *, workers=None) -> TPReport:
    """Polya frequency of order ``r``, judged on the ``(N+1) x (N+1)`` Toeplitz truncation."""
    a = _nonneg(a)
    return is_tp_r(toeplitz(a, N), r, workers=workers)
