"""
Polynomial coefficients in q
============================

Triangles whose coefficients are polynomials in q.  A matrix is q-TP when
every minor has nonnegative coefficients.
"""

from tptri import QCoefficientSpec, build_q_recursive, check_q_criterion, is_q_tp
from tptri.arith import format_qpoly

spec = QCoefficientSpec.of(r=1, s="min(k, 1)*q + 1", t="q", name="q-catalan")
tri = build_q_recursive(spec, 4)
for row in tri.rows:
    print(" | ".join(format_qpoly(p) for p in row))

# %%
# The first column at q = 1 is the Catalan numbers again
print([int(p(1)) for p in tri.column(0)])

# %%
print("s_k >=_q r_k t_k + 1:", check_q_criterion(spec, "iii", 10).holds)
report = is_q_tp(tri.to_array(), "all")
print("q-TP up to order 4:", report.verified, report.minors_evaluated)

# %%
# A failing case shows the offending polynomial and where it goes negative
bad = QCoefficientSpec.of(r="q", s=1, t="q")
report = is_q_tp(build_q_recursive(bad, 3).to_array(), "all")
print(format_qpoly(report.witness.value), "first negative at q^%d" % report.witness.negative_coefficient)
