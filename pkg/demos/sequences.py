"""
Log-convexity and Polya frequency sequences
===========================================

Catalan-like numbers of a TP_2 triangle are log-convex.  Log-convexity of a
positive sequence is the TP_2 property of its Hankel matrix; log-concavity
is the TP_2 property of its Toeplitz matrix.
"""

from tptri import catalan_like, get_spec, hankel, is_log_concave, is_log_convex, is_pf_r, is_tp_r

bell = catalan_like(get_spec("bell"), 12)
print("Bell log-convex:", is_log_convex(bell))
print("Hankel TP_2:", is_tp_r(hankel(bell, 6), 2).verified)

# %%
row = [1, 6, 15, 20, 15, 6, 1]
print("binomial row log-concave:", is_log_concave(row))
print("PF_3:", is_pf_r(row, 3, 8).verified)

# %%
# Internal zeros break ratio arguments; the full pairwise condition is used
print(is_log_convex([0, 1, 1, 0]), is_pf_r([1, 0, 1], 2, 3).witness)
