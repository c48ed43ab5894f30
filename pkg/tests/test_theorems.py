"""Property tests for the implications the certificates rely on."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import coefficient_specs, small, tridiagonals
from tptri.certify import (
    check_criterion,
    check_diagonal_dominance,
    is_log_convex,
    is_tp_r,
    tridiag_det,
)
from tptri.triangles import CoefficientSpec, LowerTriangle, build_recursive, catalan_like, coefficient_matrix

N_MAX = 6


def specs_up_to(n_max):
    return st.integers(1, n_max).flatmap(lambda N: st.tuples(st.just(N), coefficient_specs(N)))


@st.composite
def satisfying(draw, which):
    """Spec of order N built to satisfy one sufficient condition (often with equality)."""
    N = draw(st.integers(1, N_MAX))
    slack = st.sampled_from([Fraction(0), Fraction(0), Fraction(1, 2), Fraction(2)])
    r = draw(st.lists(small, min_size=N + 2, max_size=N + 2))
    t = draw(st.lists(small, min_size=N + 2, max_size=N + 2))
    rk = lambda k: r[k - 1]
    tk = lambda k: t[k - 1]
    s = []
    for k in range(N + 2):
        if which == "thm-2.8-i":
            need = rk(1) if k == 0 else rk(k + 1) + tk(k)
        elif which == "thm-2.8-ii":
            need = tk(1) if k == 0 else rk(k) + tk(k + 1)
        else:
            need = Fraction(1) if k == 0 else rk(k) * tk(k) + 1
        s.append(need + draw(slack))
    return N, CoefficientSpec.of(r, s, t)


@settings(max_examples=40)
@given(st.sampled_from(["thm-2.8-i", "thm-2.8-ii", "thm-2.9"]).flatmap(
    lambda w: st.tuples(st.just(w), satisfying(w))))
def test_sufficient_conditions_are_sound(case):
    which, (N, spec) = case
    assert check_criterion(spec, which, N).holds
    assert is_tp_r(build_recursive(spec, N).to_array(), N + 1).verified


@settings(max_examples=60)
@given(specs_up_to(N_MAX), st.integers(1, 4))
def test_coefficient_tp_r_implies_triangle_tp_r(case, r):
    N, spec = case
    if is_tp_r(coefficient_matrix(spec, N).to_array(), r).verified:
        assert is_tp_r(build_recursive(spec, N).to_array(), r).verified


@settings(max_examples=60)
@given(specs_up_to(8))
def test_triangle_tp2_implies_log_convex(case):
    N, spec = case
    if is_tp_r(build_recursive(spec, N).to_array(), 2).verified:
        assert is_log_convex(catalan_like(spec, N))


@settings(max_examples=60)
@given(specs_up_to(8))
def test_product_condition_implies_log_convex(case):
    N, spec = case
    if check_criterion(spec, "cor-2.4", N).holds:
        assert is_log_convex(catalan_like(spec, N))


@settings(max_examples=100)
@given(tridiagonals(max_order=8), st.sampled_from(["row", "column"]))
def test_diagonal_dominance_gives_nonnegative_det(J, side):
    if check_diagonal_dominance(J, side).holds:
        assert tridiag_det(J) >= 0


@settings(max_examples=40)
@given(st.integers(1, N_MAX).flatmap(
    lambda N: st.tuples(st.just(N), coefficient_specs(N).map(
        lambda sp: CoefficientSpec(sp.r, sp.s, lambda k: Fraction(0))))))
def test_bidiagonal_triangles_are_tp(case):
    N, spec = case
    assert check_criterion(spec, "cor-2.5", N).holds
    assert is_tp_r(build_recursive(spec, N).to_array(), N + 1).verified


@st.composite
def tp2_lower_triangles(draw):
    n = draw(st.integers(1, 5))
    rows = []
    for i in range(n):
        rows.append(tuple(Fraction(draw(st.integers(0, 4))) for _ in range(i + 1)))
    m = LowerTriangle(tuple(rows)).to_array()
    return m


@settings(max_examples=80)
@given(tp2_lower_triangles(), tp2_lower_triangles())
def test_product_of_tp2_is_tp2(a, b):
    n = min(a.shape[0], b.shape[0])
    a, b = a[:n, :n], b[:n, :n]
    if is_tp_r(a, 2).verified and is_tp_r(b, 2).verified:
        assert is_tp_r(a @ b, 2).verified


@settings(max_examples=40)
@given(specs_up_to(N_MAX))
def test_truncation_ladder(case):
    """A failure at a smaller truncation persists in every larger one."""
    N, spec = case
    big = is_tp_r(build_recursive(spec, N).to_array(), "all")
    small_ok = all(is_tp_r(build_recursive(spec, n).to_array(), "all").verified for n in range(N + 1))
    assert big.verified <= small_ok
