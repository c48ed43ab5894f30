"""Low-level exact determinant kernels and the minor-enumeration loop.

Everything here works on plain Python data (lists of ints, or tuples of ints
standing for integer polynomials) so the hot loops stay cheap and the data
pickles cleanly for worker processes.  Callers scale rational rows by positive
integers first; that changes no minor's sign.
"""

from __future__ import annotations

from itertools import combinations
from math import lcm


# -- integers ---------------------------------------------------------------

def det_int(a):
    """Determinant of a square integer matrix (list of lists). ``a`` is not modified."""
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if n == 3:
        (p, q, r), (s, t, u), (v, w, x) = a
        return p * (t * x - u * w) - q * (s * x - u * v) + r * (s * w - t * v)
    return _bareiss_int([list(row) for row in a])


def _bareiss_int(a):
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


# -- integer polynomials (tuples, low degree first, no trailing zeros) -----

def _pnorm(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _pnorm(out)


def pneg(a):
    return tuple(-x for x in a)


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def pdiv_exact(a, d):
    """Exact quotient ``a / d`` in Z[q]; raises ArithmeticError otherwise."""
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    rem = list(a)
    lead = d[-1]
    m = len(d)
    if len(rem) < m:
        raise ArithmeticError("inexact polynomial division")
    quot = [0] * (len(rem) - m + 1)
    for i in range(len(quot) - 1, -1, -1):
        c, r = divmod(rem[i + m - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[i] = c
        if c:
            for j, dj in enumerate(d):
                rem[i + j] -= c * dj
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return _pnorm(quot)


def det_ipoly(a):
    """Determinant of a square matrix over Z[q] (entries are coefficient tuples)."""
    n = len(a)
    if n == 0:
        return (1,)
    if n == 1:
        return a[0][0]
    if n == 2:
        return psub(pmul(a[0][0], a[1][1]), pmul(a[0][1], a[1][0]))
    if n == 3:
        total = ()
        for j, sgn in ((0, 1), (1, -1), (2, 1)):
            if not a[0][j]:
                continue
            c = [x for x in range(3) if x != j]
            sub = psub(pmul(a[1][c[0]], a[2][c[1]]), pmul(a[1][c[1]], a[2][c[0]]))
            term = pmul(a[0][j], sub)
            total = padd(total, term if sgn > 0 else pneg(term))
        return total
    return _bareiss_ipoly([list(row) for row in a])


def _bareiss_ipoly(a):
    n = len(a)
    sign = 1
    prev = (1,)
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ()
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                num = psub(pmul(rowi[j], akk), pmul(aik, rowk[j]))
                rowi[j] = pdiv_exact(num, prev)
        prev = akk
    last = a[n - 1][n - 1]
    return last if sign > 0 else pneg(last)


def first_negative_coeff(p):
    for i, c in enumerate(p):
        if c < 0:
            return i
    return None


# -- scaling rational data to integers --------------------------------------

def scale_rows_int(rows):
    """Scale each row of Fractions by the lcm of its denominators.

    Returns ``(int_rows, scales)``.  Scales are positive, so every minor of the
    result has the same sign as the original, times ``prod(scales over rows)``.
    """
    out, scales = [], []
    for row in rows:
        s = lcm(1, *(x.denominator for x in row))
        out.append([int(x * s) for x in row])
        scales.append(s)
    return out, scales


def scale_rows_ipoly(rows):
    """Like :func:`scale_rows_int` for rows of QPoly; entries become int tuples."""
    out, scales = [], []
    for row in rows:
        s = lcm(1, *(c.denominator for p in row for c in p.coeffs))
        out.append([tuple(int(c * s) for c in p.coeffs) for p in row])
        scales.append(s)
    return out, scales


# -- minor enumeration ------------------------------------------------------

KERNELS = {
    "int": (det_int, lambda d: d < 0),
    "poly": (det_ipoly, lambda d: first_negative_coeff(d) is not None),
}


def is_lower_triangular(a):
    return all(not a[i][j] for i in range(len(a)) for j in range(i + 1, len(a[i])))


def scan_block(a, kind, k, row_sets, lower):
    """Scan all order-``k`` minors whose row set is in ``row_sets``.

    Stops at the first bad minor.  Returns ``(scanned, witness)`` where
    witness is ``(rows, cols, det)`` or None.  Column sets are taken in
    lexicographic order within each row set.
    """
    det, bad = KERNELS[kind]
    ncols = len(a[0]) if a else 0
    col_sets = list(combinations(range(ncols), k))
    scanned = 0
    for rows in row_sets:
        sel = [a[i] for i in rows]
        for cols in col_sets:
            scanned += 1
            # lower triangular: a column index above its paired row index forces det 0
            if lower and any(c > r for r, c in zip(rows, cols)):
                continue
            d = det([[row[c] for c in cols] for row in sel])
            if bad(d):
                return scanned, (rows, cols, d)
    return scanned, None


def _scan_block_star(args):
    return scan_block(*args)


def enumerate_minors(a, kind, max_order, workers=None):
    """Scan minors of orders ``1..max_order`` in canonical order.

    Canonical order is ascending minor order, then lexicographic row set,
    then lexicographic column set.  With ``workers > 1`` the row sets of each
    order are split into contiguous blocks scanned in parallel; the first
    block (in canonical order) holding a bad minor wins, so the witness and
    the reported count match the sequential scan exactly.
    """
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    top = min(max_order, nrows, ncols)
    lower = is_lower_triangular(a)
    total = 0
    pool = None
    if workers and workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        pool = ProcessPoolExecutor(max_workers=workers)
    try:
        for k in range(1, top + 1):
            row_sets = list(combinations(range(nrows), k))
            if pool is None or len(row_sets) < 2 * workers:
                scanned, witness = scan_block(a, kind, k, row_sets, lower)
                total += scanned
                if witness:
                    return total, witness
                continue
            size = -(-len(row_sets) // (4 * workers))
            blocks = [row_sets[i:i + size] for i in range(0, len(row_sets), size)]
            futures = [pool.submit(_scan_block_star, (a, kind, k, b, lower)) for b in blocks]
            for fut in futures:
                scanned, witness = fut.result()
                total += scanned
                if witness:
                    for other in futures:
                        other.cancel()
                    return total, witness
        return total, None
    finally:
        if pool is not None:
            pool.shutdown(wait=True, cancel_futures=True)
