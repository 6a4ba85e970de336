"""Exact integer kernels, pure-Python reference implementation.

These are the hot loops of the whole package: integer matrix products and
commutators, fraction-free rank computation, and the Weyl dimension
products.  `lierep.kernels` selects either this module or the compiled
twin `lierep._ckernels` at import time; both expose the same functions
with identical semantics (arbitrary-precision, exact).

Matrices are lists of row lists of Python ints.  No function mutates its
arguments.
"""

BACKEND = "python"


def mat_mul(a, b):
    """Product of two integer matrices (skips zero entries, inputs untouched)."""
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if inner else 0
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
                        acc[j] += aik * v
        out.append(acc)
    return out


def commutator(a, b):
    """a·b − b·a for square integer matrices."""
    ab = mat_mul(a, b)
    ba = mat_mul(b, a)
    n = len(ab)
    m = len(ab[0]) if n else 0
    return [[ab[i][j] - ba[i][j] for j in range(m)] for i in range(n)]


def rank_int(rows):
    """Rank of an integer matrix via fraction-free (Bareiss) elimination.

    All divisions are exact; a nonzero remainder indicates corrupted input
    (non-integer entries) and raises ArithmeticError.
    """
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
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
                num = mr[c] * p - pr[c] * q
                quot, rem = divmod(num, prev)
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
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return ncols
    return ncols - rank_int(rows)


def weyl_dim_product(weights, lam1, denom):
    """Exact Π_α ⟨λ+ρ, α⟩ / Π_α ⟨ρ, α⟩ from precomputed pairing data.

    weights: per positive root, the integer coefficient vector w with
    ⟨λ+ρ, α⟩ ∝ Σ_j w_j·(λ_j+1); lam1 is the shifted weight (λ_j+1);
    denom is the precomputed product of the Σ_j w_j.  The quotient must be
    an integer (Weyl dimension); anything else raises ArithmeticError.
    """
    num = 1
    for w in weights:
        s = 0
        for wj, lj in zip(w, lam1):
            if wj:
                s += wj * lj
        num *= s
    quot, rem = divmod(num, denom)
    if rem:
        raise ArithmeticError("Weyl dimension product is not integral")
    return quot


def min_weyl_dim_box(weights, rho_pairings, rank, cap):
    """Minimum Weyl dimension over nonzero dominant weights with coords ≤ cap.

    Prunes a weight as soon as its partial product already reaches the
    running minimum (every factor ⟨λ+ρ,α⟩/⟨ρ,α⟩ is ≥ 1 for dominant λ, so
    partial ratios only grow).
    """
    best = None
    nroots = len(weights)
    lam1 = [1] * rank
    # odometer over the box, skipping the zero weight
    coords = [0] * rank
    while True:
        i = rank - 1
        while i >= 0 and coords[i] == cap:
            coords[i] = 0
            lam1[i] = 1
            i -= 1
        if i < 0:
            break
        coords[i] += 1
        lam1[i] += 1
        num = 1
        den = 1
        pruned = False
        for r in range(nroots):
            w = weights[r]
            s = 0
            for j in range(rank):
                wj = w[j]
                if wj:
                    s += wj * lam1[j]
            num *= s
            den *= rho_pairings[r]
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
