"""Independent oracles and corpus builders shared by the test modules.

Everything here deliberately avoids the code paths it is used to check:
partitions are enumerated rather than counted by recurrence, ranks are
computed over Fractions with textbook elimination rather than by the
fraction-free kernel, and so on.
"""

from fractions import Fraction

from lierep.invariants import ReductiveAlgebra, SimpleType


def enumerate_partitions(n, max_part=None):
    """All partitions of n as nonincreasing tuples (exhaustive enumeration)."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in enumerate_partitions(n - first, first):
            yield (first,) + rest


def rank_fraction(rows):
    """Rank over the rationals by plain Gaussian elimination with Fractions."""
    m = [[Fraction(v) for v in row] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    for col in range(nc):
        piv = next((r for r in range(rank, nr) if m[r][col]), None)
        if piv is None:
            continue
        m[piv], m[rank] = m[rank], m[piv]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(nr):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def weyl_dim_fraction(weights, lam1, rho_pairings):
    """Weyl dimension as an explicit Fraction product (oracle for the kernels)."""
    value = Fraction(1)
    for w, rho in zip(weights, rho_pairings):
        value *= Fraction(sum(wj * lj for wj, lj in zip(w, lam1)), rho)
    assert value.denominator == 1
    return int(value)


def small_corpus(max_center=4):
    """A spread of small reductive algebras for property tests."""
    a1 = SimpleType("A", 1)
    a2 = SimpleType("A", 2)
    a3 = SimpleType("A", 3)
    b2 = SimpleType("B", 2)
    c3 = SimpleType("C", 3)
    multisets = [
        (),
        (a1,),
        (a2,),
        (a3,),
        (b2,),
        (c3,),
        (a1, a1),
        (a1, a2),
        (a1, b2),
        (a2, a2),
        (a1, a1, a1),
        (a1, c3),
    ]
    out = []
    for simples in multisets:
        for k in range(max_center + 1):
            g = ReductiveAlgebra(simples, k)
            if not g.is_zero:
                out.append(g)
    return out


def multiplicity_vectors(weights, budget):
    """All multiplicity vectors m with sum m_i * weights_i <= budget."""
    out = []

    def rec(i, remaining, acc):
        if i == len(weights):
            out.append(tuple(acc))
            return
        w = weights[i]
        for m in range(remaining // w + 1):
            acc.append(m)
            rec(i + 1, remaining - m * w, acc)
            acc.pop()

    rec(0, budget, [])
    return out
