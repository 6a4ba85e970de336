# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Exact integer kernels, compiled twin of `lierep._kernels_py`.

Values stay Python ints (arbitrary precision is required: Weyl products
and elimination pivots overflow machine words routinely); the speedup
comes from typed index loops and C accumulators where the magnitudes are
provably small (pairing sums).
"""

BACKEND = "c"


def mat_mul(a, b):
    """Product of two integer matrices (skips zero entries, inputs untouched)."""
    cdef Py_ssize_t rows = len(a)
    cdef Py_ssize_t inner = len(b)
    cdef Py_ssize_t cols = len(b[0]) if inner else 0
    cdef Py_ssize_t i, j, k
    out = []
    for i in range(rows):
        ai = a[i]
        acc = [0] * cols
        for k in range(inner):
            aik = ai[k]
            if aik:
                bk = b[k]
                for j in range(cols):
                    v = bk[j]
                    if v:
                        acc[j] = acc[j] + aik * v
        out.append(acc)
    return out


def commutator(a, b):
    """a·b − b·a for square integer matrices."""
    ab = mat_mul(a, b)
    ba = mat_mul(b, a)
    cdef Py_ssize_t n = len(ab)
    cdef Py_ssize_t m = len(ab[0]) if n else 0
    cdef Py_ssize_t i, j
    out = []
    for i in range(n):
        ri = ab[i]
        si = ba[i]
        out.append([ri[j] - si[j] for j in range(m)])
    return out


def rank_int(rows):
    """Rank of an integer matrix via fraction-free (Bareiss) elimination."""
    m = [list(row) for row in rows]
    cdef Py_ssize_t nr = len(m)
    cdef Py_ssize_t nc = len(m[0]) if nr else 0
    cdef Py_ssize_t rank = 0, col, r, c, piv
    prev = 1
    for col in range(nc):
        piv = -1
        for r in range(rank, nr):
            if m[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            m[piv], m[rank] = m[rank], m[piv]
        pr = m[rank]
        p = pr[col]
        for r in range(rank + 1, nr):
            mr = m[r]
            q = mr[col]
            for c in range(col + 1, nc):
                quot, rem = divmod(mr[c] * p - pr[c] * q, prev)
                if rem:
                    raise ArithmeticError("non-exact division in integer elimination")
                mr[c] = quot
            mr[col] = 0
        prev = p
        rank += 1
        if rank == nr:
            break
    return rank


def nullspace_dim_int(rows, ncols=None):
    """Dimension of the solution space of the homogeneous system rows·x = 0."""
    cdef Py_ssize_t cols
    if ncols is None:
        cols = len(rows[0]) if rows else 0
    else:
        cols = ncols
    if not rows:
        return cols
    return cols - rank_int(rows)


cdef _flatten_weights(weights, Py_ssize_t rank, long[::1] flat):
    cdef Py_ssize_t r, j
    for r in range(len(weights)):
        w = weights[r]
        for j in range(rank):
            flat[r * rank + j] = w[j]


def weyl_dim_product(weights, lam1, denom):
    """Exact Weyl dimension from precomputed pairing data (see pure twin)."""
    cdef Py_ssize_t nroots = len(weights)
    cdef Py_ssize_t rank = len(lam1)
    cdef Py_ssize_t r, j
    cdef long long s
    import array
    wflat = array.array("l", [0]) * (nroots * rank)
    cdef long[::1] wv = wflat
    _flatten_weights(weights, rank, wv)
    lflat = array.array("l", lam1)
    cdef long[::1] lv = lflat
    num = 1
    for r in range(nroots):
        s = 0
        for j in range(rank):
            s += wv[r * rank + j] * lv[j]
        num *= s
    quot, rem = divmod(num, denom)
    if rem:
        raise ArithmeticError("Weyl dimension product is not integral")
    return quot


def min_weyl_dim_box(weights, rho_pairings, rank_in, cap_in):
    """Minimum Weyl dimension over nonzero dominant weights with coords ≤ cap."""
    cdef Py_ssize_t rank = rank_in
    cdef Py_ssize_t cap = cap_in
    cdef Py_ssize_t nroots = len(weights)
    cdef Py_ssize_t i, r, j
    cdef long long s
    import array
    wflat = array.array("l", [0]) * (nroots * rank)
    cdef long[::1] wv = wflat
    _flatten_weights(weights, rank, wv)
    coords = array.array("l", [0] * rank)
    lam1 = array.array("l", [1] * rank)
    cdef long[::1] cv = coords
    cdef long[::1] lv = lam1
    rho = list(rho_pairings)
    best = None
    cdef bint pruned
    while True:
        i = rank - 1
        while i >= 0 and cv[i] == cap:
            cv[i] = 0
            lv[i] = 1
            i -= 1
        if i < 0:
            break
        cv[i] += 1
        lv[i] += 1
        num = 1
        den = 1
        pruned = False
        for r in range(nroots):
            s = 0
            for j in range(rank):
                s += wv[r * rank + j] * lv[j]
            num *= s
            den *= rho[r]
            if best is not None and num >= best * den:
                pruned = True
                break
        if not pruned:
            quot, rem = divmod(num, den)
            if rem:
                raise ArithmeticError("Weyl dimension product is not integral")
            if best is None or quot < best:
                best = quot
    return best
