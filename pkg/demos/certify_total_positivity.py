"""
Certifying total positivity
===========================

Exhaustive exact minor scans, the tridiagonal shortcut, and the cheap
sufficient conditions on the coefficients.
"""

import numpy as np

from tptri import (
    CoefficientSpec,
    build_recursive,
    check_criterion,
    coefficient_matrix,
    get_spec,
    is_tp_r,
    tridiag_is_tp,
)

# %%
# Full scan of the 9x9 Bell truncation: every minor of every order
report = is_tp_r(build_recursive(get_spec("bell"), 8).to_array(), "all")
print(report.verified, report.minors_evaluated)

# %%
# A spec whose off-diagonal coefficients are too large.  The report carries
# the first negative minor in canonical order.
bad = CoefficientSpec.of(r=2, s=1, t=2, name="too-wide")
report = is_tp_r(build_recursive(bad, 4).to_array(), "all")
print(report.witness)

# %%
# For the tridiagonal coefficient matrix only contiguous principal minors matter
J = coefficient_matrix(bad, 4)
print("J TP:", tridiag_is_tp(J).verified)

# %%
# The sufficient conditions are simple inequalities on r, s, t
for which in ("cor-2.4", "thm-2.8-i", "thm-2.8-ii", "thm-2.9"):
    print(which, check_criterion(get_spec("bell"), which, 20).holds,
          check_criterion(bad, which, 20).first_failure)

# %%
# Scans accept plain numpy object arrays too
m = np.array([[1, 1, 0], [1, 2, 1], [0, 1, 2]], dtype=object)
print(is_tp_r(m, 2))
