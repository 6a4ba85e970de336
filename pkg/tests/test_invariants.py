"""Closed-form invariants: construction rules, worked values, and the
monotonicity / additivity properties."""

import time

import pytest

from lierep.invariants import (
    ReductiveAlgebra,
    SimpleType,
    alpha,
    alpha_embedding_bound,
    asymptotic_check,
    dim_of,
    dim_simple,
    mu,
    mu_a1_plus_center,
    mu_abelian,
    mu_simple,
    p_bound,
    partition_count,
)
from lierep import parse_expr
from helpers import enumerate_partitions, small_corpus

A1 = SimpleType("A", 1)


class TestSimpleType:
    def test_c2_canonicalizes_to_b2(self):
        assert SimpleType("C", 2) == SimpleType("B", 2)
        assert SimpleType.from_name("C2").name == "B2"

    @pytest.mark.parametrize("name", ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G1", "H2"])
    def test_invalid_types_rejected(self, name):
        with pytest.raises(ValueError):
            SimpleType.from_name(name)

    @pytest.mark.parametrize("name", ["A1", "A9", "B2", "B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2"])
    def test_valid_types(self, name):
        assert SimpleType.from_name(name).name == name

    def test_canonical_order(self):
        names = ["G2", "A2", "B2", "A10", "A9", "D4"]
        got = sorted(SimpleType.from_name(n) for n in names)
        assert [t.name for t in got] == ["A2", "A9", "A10", "B2", "D4", "G2"]


class TestReductiveAlgebra:
    def test_sorting_and_equality(self):
        g1 = ReductiveAlgebra((SimpleType("B", 2), A1), 3)
        g2 = ReductiveAlgebra((A1, SimpleType("C", 2)), 3)
        assert g1 == g2
        assert str(g1) == "A1+B2+C^3"

    def test_zero_algebra(self):
        zero = ReductiveAlgebra()
        assert zero.is_zero and mu(zero) == 0 and dim_of(zero) == 0
        assert str(zero) == "0"

    def test_direct_sum_merges(self):
        a = parse_expr("A1+C^2")
        b = parse_expr("B2+C^1")
        assert str(a + b) == "A1+B2+C^3"

    def test_negative_center_rejected(self):
        with pytest.raises(ValueError):
            ReductiveAlgebra((), -1)


class TestDim:
    @pytest.mark.parametrize(
        "expr,expected",
        [("G2", 14), ("A3", 15), ("C^7", 7), ("E6", 78), ("E7", 133), ("E8", 248),
         ("F4", 52), ("B3", 21), ("C3", 21), ("D4", 28), ("B2", 10)],
    )
    def test_values(self, expr, expected):
        assert dim_of(parse_expr(expr)) == expected


class TestMuAbelian:
    @pytest.mark.parametrize("m,expected", [(5, 4), (1, 1), (0, 0), (2, 2), (-3, 0), (10, 6)])
    def test_values(self, m, expected):
        assert mu_abelian(m) == expected

    def test_least_d_property_exhaustive(self):
        # mu_abelian(m) is the least d with floor(d^2/4) + 1 >= m
        for m in range(2, 10001):
            d = mu_abelian(m)
            assert d * d // 4 + 1 >= m
            assert (d - 1) * (d - 1) // 4 + 1 < m


class TestMu:
    @pytest.mark.parametrize(
        "expr,expected",
        [
            ("A1+C^4", 5),
            ("A1+C3+C^6", 12),
            ("E8", 248),
            ("A2+C^1", 3),
            ("C^5", 4),
            ("B2", 4),
            ("C3", 6),
            ("C4", 8),
            ("D4", 8),
            ("B3", 7),
            ("G2", 7),
            ("F4", 26),
            ("E6", 27),
            ("E7", 56),
        ],
    )
    def test_values(self, expr, expected):
        assert mu(parse_expr(expr)) == expected

    def test_a1_plus_center_closed_form(self):
        assert mu_a1_plus_center(4) == 5
        assert mu_a1_plus_center(3) == 4
        assert mu_a1_plus_center(10) == 8
        for k in range(3, 21):
            assert mu_a1_plus_center(k) == mu(ReductiveAlgebra((A1,), k))
        with pytest.raises(ValueError):
            mu_a1_plus_center(2)


class TestAlpha:
    @pytest.mark.parametrize(
        "expr,expected",
        [
            ("A1+C^3", 4),
            ("C2", 3),
            ("A9+C^1", 26),
            ("A1+C3+C^5", 12),
            ("A1+A1", 2),
            ("A2+C^1", 3),
            ("B5", 11),
            ("C^4", 4),
        ],
    )
    def test_values(self, expr, expected):
        assert alpha(parse_expr(expr)) == expected

    def test_unavailable(self):
        assert alpha(parse_expr("D4")) is None
        assert alpha(parse_expr("G2+C^2")) is None

    def test_extra_table(self):
        extra = {SimpleType("D", 4): 7}
        assert alpha(parse_expr("D4+C^1"), extra) == 8

    def test_additive_where_available(self):
        corpus = [g for g in small_corpus() if alpha(g) is not None]
        for a in corpus[:20]:
            for b in corpus[:20]:
                assert alpha(a + b) == alpha(a) + alpha(b)


class TestEmbeddingBound:
    def test_paper_cases(self):
        assert alpha_embedding_bound(parse_expr("A1+C^4"), 4) is False
        assert alpha_embedding_bound(parse_expr("A1+C^4"), 5) is True
        assert alpha_embedding_bound(parse_expr("C^1"), 1) is True

    def test_below_semisimple_mu_is_false(self):
        assert alpha_embedding_bound(parse_expr("A2"), 2) is False

    def test_never_rejects_embeddable(self):
        # soundness: mu(g) <= n means g does embed, the certificate must agree
        for g in small_corpus():
            m = mu(g)
            for n in range(m, m + 3):
                assert alpha_embedding_bound(g, n) is True


class TestPartitions:
    def test_against_enumeration(self):
        for j in range(26):
            assert partition_count(j) == sum(1 for _ in enumerate_partitions(j))

    def test_known_values(self):
        assert partition_count(0) == 1
        assert partition_count(5) == 7
        assert partition_count(10) == 42

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            partition_count(-1)


class TestPBound:
    def test_k_zero(self):
        for n in (1, 2, 7, 30):
            assert p_bound(n, 0) == 1

    def test_derived_values(self):
        # 3*p(0) + 2*p(1) + 1*p(2) with independently enumerated p(j)
        assert p_bound(3, 2) == 7
        # C(6,3)p0 + C(5,2)p1 + C(4,1)p2 + C(3,0)p3 = 20 + 10 + 8 + 3
        assert p_bound(6, 3) == 41

    def test_matches_direct_sum_with_enumerated_partitions(self):
        import math

        for n in range(1, 12):
            for k in range(n + 1):
                expected = sum(
                    math.comb(n - j, k - j) * sum(1 for _ in enumerate_partitions(j))
                    for j in range(k + 1)
                )
                assert p_bound(n, k) == expected

    def test_range_validation(self):
        with pytest.raises(ValueError):
            p_bound(0, 0)
        with pytest.raises(ValueError):
            p_bound(3, 4)
        with pytest.raises(ValueError):
            p_bound(3, -1)

    def test_nondecreasing_in_n(self):
        for k in range(11):
            values = [p_bound(n, k) for n in range(max(k, 1), 31)]
            assert all(v >= 1 for v in values)
            assert all(a <= b for a, b in zip(values, values[1:]))


class TestAsymptotic:
    def test_n_one_holds(self):
        # p(1,0) = 1 and p(1,1) = C(1,1)p(0) + C(0,0)p(1) = 2, both under
        # the bound (113/40)*2 = 5.65
        report = asymptotic_check(1)
        assert report.rows[0].max_p == 2
        assert report.rows[0].holds

    def test_no_violations_up_to_20(self):
        assert asymptotic_check(20).violations == ()

    def test_thirty_under_a_second(self):
        start = time.perf_counter()
        report = asymptotic_check(30)
        assert time.perf_counter() - start < 1.0
        assert report.violations == ()
        assert len(report.rows) == 30


class TestStructuralProperties:
    def test_monotonicity_under_deletion(self):
        for g in small_corpus():
            for i in range(g.ell):
                smaller = ReductiveAlgebra(g.simples[:i] + g.simples[i + 1 :], g.center_dim)
                assert mu(smaller) <= mu(g)
            if g.center_dim:
                assert mu(g.with_center(g.center_dim - 1)) <= mu(g)

    def test_subadditivity(self):
        corpus = small_corpus()
        for a in corpus[:25]:
            for b in corpus[:25]:
                assert mu(a + b) <= mu(a) + mu(b)

    def test_scalar_line_identity(self):
        for g in small_corpus():
            if not g.is_semisimple or g.is_zero:
                continue
            for k in range(g.ell + 1):
                assert mu(g.with_center(k)) == mu(g)

    def test_theorem_consistency(self):
        for g in small_corpus():
            if g.ell >= 1:
                assert mu(g) == mu(g.semisimple_part()) + mu_abelian(g.center_dim - g.ell)

    def test_mu_simple_matches_table(self):
        table = {
            "A1": 2, "A2": 3, "A5": 6, "B2": 4, "B3": 7, "B5": 11,
            "C3": 6, "C4": 8, "D4": 8, "D5": 10,
            "E6": 27, "E7": 56, "E8": 248, "F4": 26, "G2": 7,
        }
        for name, value in table.items():
            assert mu_simple(SimpleType.from_name(name)) == value
            assert dim_simple(SimpleType.from_name(name)) >= value
