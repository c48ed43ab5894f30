"""
Named recursive triangles
=========================

Every triangle here comes from three coefficient sequences r, s, t.  We build
a few, read off their first columns, and check the row-shift factorization
through the tridiagonal coefficient matrix.
"""

from tptri import build_general, build_recursive, catalan_like, coefficient_matrix, get_spec
from tptri import verify_factorization

# %%
# The Catalan triangle with s_0 = 1, s_k = 2, r_k = t_k = 1
aigner = build_recursive(get_spec("aigner-catalan"), 6)
for row in aigner.rows:
    print(" ".join(str(x) for x in row))

# %%
# Its first column is the Catalan numbers; the Bell triangle gives Bell numbers
print("aigner:", [int(x) for x in catalan_like(get_spec("aigner-catalan"), 10)])
print("bell:  ", [int(x) for x in catalan_like(get_spec("bell"), 10)])

# %%
# Drop row 0 of A and you get A times the coefficient matrix J
J = coefficient_matrix(get_spec("bell"), 4)
print("bell J_4 =")
print(J.to_array())
print("factorization holds:", verify_factorization(get_spec("bell"), 8))

# %%
# Eulerian and Narayana triangles have (n, k)-dependent coefficients and
# start at index 1.  Narayana entries are taken from the closed form and
# cross-checked against the recurrence on interior columns.
for name in ("eulerian", "narayana"):
    tri = build_general(get_spec(name), 6)
    print(name)
    for row in tri.rows:
        print("  ", " ".join(str(x) for x in row))
