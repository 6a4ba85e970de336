"""Kernel backends: parity between pure Python and the compiled extension,
plus correctness of the fraction-free rank against a Fraction oracle."""

import random

import pytest

from lierep import _kernels_py
from helpers import rank_fraction, weyl_dim_fraction

try:
    from lierep import _ckernels

    BACKENDS = [_kernels_py, _ckernels]
except ImportError:
    BACKENDS = [_kernels_py]

backend = pytest.fixture(params=BACKENDS, ids=lambda m: m.BACKEND)(lambda request: request.param)


def _random_matrix(rng, rows, cols, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def test_mat_mul_and_commutator(backend):
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 6)
        a = _random_matrix(rng, n, n)
        b = _random_matrix(rng, n, n)
        ab = backend.mat_mul(a, b)
        expected = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        assert ab == expected
        com = backend.commutator(a, b)
        ba = backend.mat_mul(b, a)
        assert com == [[ab[i][j] - ba[i][j] for j in range(n)] for i in range(n)]


def test_mat_mul_rectangular(backend):
    a = [[1, 2, 3], [4, 5, 6]]
    b = [[1, 0], [0, 1], [1, 1]]
    assert backend.mat_mul(a, b) == [[4, 5], [10, 11]]


def test_rank_matches_fraction_oracle(backend):
    rng = random.Random(11)
    for _ in range(60):
        rows = rng.randint(1, 8)
        cols = rng.randint(1, 8)
        m = _random_matrix(rng, rows, cols, -20, 20)
        if rng.random() < 0.5 and rows >= 2:
            # force rank deficiency with duplicated / scaled rows
            m[rng.randrange(rows)] = [3 * v for v in m[rng.randrange(rows)]]
        assert backend.rank_int(m) == rank_fraction(m)


def test_rank_does_not_mutate_input(backend):
    m = [[2, 4], [1, 3]]
    copy = [row[:] for row in m]
    backend.rank_int(m)
    assert m == copy


def test_rank_big_entries(backend):
    # entries big enough that intermediate products exceed 64-bit words
    base = 10**25
    m = [[base + 1, base - 1], [base - 1, base + 1]]
    assert backend.rank_int(m) == 2
    assert backend.rank_int([[base, 2 * base], [3 * base, 6 * base]]) == 1


def test_nullspace_dim(backend):
    assert backend.nullspace_dim_int([[1, 2, 3]]) == 2
    assert backend.nullspace_dim_int([], ncols=4) == 4
    assert backend.nullspace_dim_int([[1, 0], [0, 1]]) == 0


def test_weyl_dim_product_matches_fraction_oracle(backend):
    rng = random.Random(13)
    for _ in range(40):
        rank = rng.randint(1, 4)
        nroots = rng.randint(1, 8)
        weights = [
            tuple(rng.randint(0, 3) for _ in range(rank)) for _ in range(nroots)
        ]
        weights = [w if any(w) else (1,) + w[1:] for w in weights]
        rho = [sum(w) for w in weights]
        denom = 1
        for v in rho:
            denom *= v
        lam1 = [rng.randint(1, 4) for _ in range(rank)]
        num = 1
        for w in weights:
            num *= sum(wj * lj for wj, lj in zip(w, lam1))
        if num % denom:
            continue  # only integral cases are legal inputs
        expected = weyl_dim_fraction(weights, lam1, rho)
        assert backend.weyl_dim_product(weights, lam1, denom) == expected


def test_min_weyl_dim_box_matches_unpruned_scan(backend):
    from itertools import product

    from lierep.invariants import SimpleType
    from lierep.weyl import root_data

    for name in ("A2", "B2", "G2", "C3"):
        rd = root_data(SimpleType.from_name(name))
        brute = None
        for combo in product(range(3), repeat=rd.rank):
            if not any(combo):
                continue
            lam1 = [c + 1 for c in combo]
            value = weyl_dim_fraction(rd.weights, lam1, rd.rho_pairings)
            brute = value if brute is None else min(brute, value)
        assert backend.min_weyl_dim_box(rd.weights, rd.rho_pairings, rd.rank, 2) == brute


def test_backends_agree_pairwise():
    if len(BACKENDS) < 2:
        pytest.skip("compiled backend not built")
    rng = random.Random(3)
    for _ in range(20):
        rows = rng.randint(1, 10)
        cols = rng.randint(1, 10)
        m = _random_matrix(rng, rows, cols, -50, 50)
        assert _kernels_py.rank_int(m) == BACKENDS[1].rank_int(m)
