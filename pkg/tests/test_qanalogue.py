from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_tp, leibniz_det
from tptri.arith import Q, QPoly, poly_is_nonneg
from tptri.certify import check_criterion, is_tp_r
from tptri.errors import NegativePolyCoefficient, UnknownCriterion
from tptri.qanalogue import (
    Q_CATALOG,
    Q_TO_NUMERIC,
    QCoefficientSpec,
    build_q_recursive,
    check_q_criterion,
    is_q_tp,
)
from tptri.triangles import build_recursive, get_spec

ONE = QPoly([1])


def test_constant_spec_matches_numeric():
    spec = get_spec("bell")
    qtri = build_q_recursive(QCoefficientSpec.from_numeric(spec), 5)
    assert qtri.evaluate(0).rows == build_recursive(spec, 5).rows
    assert all(p.degree <= 0 for row in qtri.rows for p in row)


def test_two_step_expansion():
    spec = QCoefficientSpec.of(r="q", s="1 + q", t=1)
    tri = build_q_recursive(spec, 2)
    assert tri.entry(1, 0) == 1 + Q
    assert tri.entry(1, 1) == Q
    # a_{2,0} = s_0 a_{1,0} + t_1 a_{1,1} = (1 + q)^2 + q
    assert tri.entry(2, 0) == QPoly([1, 3, 1])
    assert tri.evaluate(1).entry(2, 0) == build_recursive(get_spec("shapiro-catalan"), 2).entry(2, 0)


def test_above_diagonal_is_zero_polynomial():
    tri = build_q_recursive(Q_CATALOG["q-catalan"], 3)
    assert tri.entry(1, 2) == QPoly() and tri.entry(0, 3).is_zero()
    assert tri.to_array()[0, 2] == QPoly()


def test_negative_poly_coefficient_rejected():
    spec = QCoefficientSpec.of(r=1, s="1 - q", t=0)
    with pytest.raises(NegativePolyCoefficient):
        build_q_recursive(spec, 1)


def test_q_tp_examples():
    pascal = build_recursive(get_spec("pascal"), 3).to_array()
    assert is_q_tp(pascal, 4).verified
    assert is_q_tp([[ONE, Q], [Q, Q ** 2]], 2).verified
    report = is_q_tp([[Q, ONE], [ONE, Q]], 2)
    assert not report.verified
    assert report.witness.value == Q ** 2 - 1
    assert report.witness.negative_coefficient == 0


def test_q_witness_json_roundtrip():
    from tptri.certify import TPReport
    report = is_q_tp([[Q, ONE], [ONE, Q]], 2)
    assert TPReport.from_json(report.to_json()) == report


def test_q_criterion_examples():
    spec = QCoefficientSpec.of(r=1, s="2 + q", t=1)
    assert check_q_criterion(spec, "iii", 5).holds
    bad = QCoefficientSpec.of(r="q", s=1, t="q")
    res = check_q_criterion(bad, "iii", 2)
    assert not res.holds and res.first_failure.index == 1
    with pytest.raises(UnknownCriterion):
        check_q_criterion(spec, "iv", 2)


@pytest.mark.parametrize("name", ["pascal", "bell", "aigner-catalan", "shapiro-catalan", "stirling2"])
@pytest.mark.parametrize("which", ["i", "ii", "iii"])
def test_q_criterion_specializes(name, which):
    spec = get_spec(name)
    q = check_q_criterion(QCoefficientSpec.from_numeric(spec), which, 8)
    assert q.holds == check_criterion(spec, Q_TO_NUMERIC[which], 8).holds


@pytest.mark.parametrize("name", sorted(Q_CATALOG))
def test_q_catalog_entries_are_q_tp(name):
    spec = Q_CATALOG[name]
    assert check_q_criterion(spec, "iii", 6).holds
    assert is_q_tp(build_q_recursive(spec, 4).to_array(), "all").verified


def test_q_scan_matches_bruteforce_on_small_matrix():
    m = [[ONE, Q, QPoly()], [1 + Q, Q ** 2, Q], [ONE, 2 * Q, ONE]]
    ref = brute_tp(m, 3, negative=lambda d: not poly_is_nonneg(d), zero=QPoly(), one=ONE)
    got = is_q_tp(m, "all")
    assert got.verified == (ref is None)
    assert (got.witness.rows, got.witness.cols, got.witness.value) == ref


poly_values = st.lists(st.integers(0, 2), max_size=3).map(QPoly)


@st.composite
def q_specs(draw, N):
    r = draw(st.lists(poly_values, min_size=N + 2, max_size=N + 2))
    s = draw(st.lists(poly_values, min_size=N + 2, max_size=N + 2))
    t = draw(st.lists(poly_values, min_size=N + 2, max_size=N + 2))
    return QCoefficientSpec.of(r, s, t)


@settings(max_examples=40)
@given(st.integers(0, 5).flatmap(lambda N: st.tuples(st.just(N), q_specs(N))),
       st.sampled_from([Fraction(0), Fraction(1), Fraction(2), Fraction(1, 3)]))
def test_specialization_commutes(case, q0):
    N, spec = case
    assert build_q_recursive(spec, N).evaluate(q0).rows == build_recursive(spec.specialize(q0), N).rows


@settings(max_examples=30)
@given(st.integers(1, 3).flatmap(lambda N: st.tuples(st.just(N), q_specs(N))),
       st.sampled_from([Fraction(0), Fraction(1), Fraction(3, 2), Fraction(2)]))
def test_q_tp_implies_pointwise_tp(case, q0):
    N, spec = case
    tri = build_q_recursive(spec, N)
    if is_q_tp(tri.to_array(), "all").verified:
        assert is_tp_r(tri.evaluate(q0).to_array(), "all").verified


def test_poly_det_matches_leibniz():
    m = [[1 + Q, Q, 2], [Q ** 2, ONE, Q], [3 * ONE, Q, 1 + Q ** 3]]
    from tptri.certify import det
    assert det(m) == leibniz_det(m, zero=QPoly(), one=ONE)
