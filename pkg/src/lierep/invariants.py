"""Closed-form invariants of complex reductive Lie algebras.

A reductive algebra is a multiset of simple ideals plus an abelian center
C^k.  This module provides the dimension, the minimal faithful
representation degree mu, the maximal abelian subalgebra dimension alpha
(where known), the gl_n embedding certificate derived from alpha, and the
combinatorial nilpotent bound p(n, k) with its asymptotic check.

Everything is computed in exact integer arithmetic; there is no floating
point anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

__all__ = [
    "SimpleType",
    "ReductiveAlgebra",
    "AsymptoticReport",
    "AsymptoticRow",
    "dim_simple",
    "dim_of",
    "mu_simple",
    "mu_abelian",
    "mu",
    "mu_a1_plus_center",
    "alpha",
    "alpha_embedding_bound",
    "partition_count",
    "p_bound",
    "asymptotic_check",
]

# minimal rank per classical family (C2 is accepted and stored as B2)
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class SimpleType:
    """One simple complex Lie algebra: family letter A..G plus rank.

    The isomorphic pair B2 = C2 is canonicalized to B2, so equal algebras
    always compare equal.  Ordering is (family, rank), the canonical sort
    key used throughout the package.
    """

    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, rank = self.family, self.rank
        if not isinstance(rank, int) or isinstance(rank, bool):
            raise ValueError(f"rank must be an integer, got {rank!r}")
        if fam == "C" and rank == 2:
            object.__setattr__(self, "family", "B")
            fam = "B"
        if fam in _MIN_RANK:
            if rank < _MIN_RANK[fam]:
                raise ValueError(
                    f"{fam}{rank} is not a simple type (rank >= {_MIN_RANK[fam]} required)"
                )
        elif fam in _EXCEPTIONAL_RANKS:
            if rank not in _EXCEPTIONAL_RANKS[fam]:
                allowed = ",".join(map(str, _EXCEPTIONAL_RANKS[fam]))
                raise ValueError(f"{fam}{rank} is not a simple type (rank in {{{allowed}}})")
        else:
            raise ValueError(f"unknown family {fam!r} (expected a letter A-G)")

    @classmethod
    def from_name(cls, name: str) -> "SimpleType":
        """Parse a name like "A3" or "C2" (canonicalized to B2)."""
        name = name.strip()
        if len(name) < 2 or not name[1:].isdigit():
            raise ValueError(f"malformed simple type name {name!r}")
        return cls(name[0], int(name[1:]))

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def is_classical(self) -> bool:
        return self.family in _MIN_RANK

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class ReductiveAlgebra:
    """A reductive Lie algebra: simple ideals s_1..s_l plus center C^k.

    The simple ideals are kept canonically sorted, so two descriptions of
    the same algebra compare equal.  The zero algebra (no ideals, k = 0)
    is legal and has mu = dim = 0.
    """

    simples: tuple[SimpleType, ...] = ()
    center_dim: int = 0

    def __post_init__(self) -> None:
        simples = tuple(sorted(self.simples))
        object.__setattr__(self, "simples", simples)
        k = self.center_dim
        if not isinstance(k, int) or isinstance(k, bool) or k < 0:
            raise ValueError(f"center dimension must be a nonnegative integer, got {k!r}")

    @property
    def ell(self) -> int:
        """Length: the number of simple ideals."""
        return len(self.simples)

    @property
    def is_zero(self) -> bool:
        return not self.simples and self.center_dim == 0

    @property
    def is_semisimple(self) -> bool:
        return self.center_dim == 0

    @property
    def is_abelian(self) -> bool:
        return not self.simples

    def semisimple_part(self) -> "ReductiveAlgebra":
        return ReductiveAlgebra(self.simples, 0)

    def with_center(self, k: int) -> "ReductiveAlgebra":
        return ReductiveAlgebra(self.simples, k)

    def __add__(self, other: "ReductiveAlgebra") -> "ReductiveAlgebra":
        """Direct sum: merge the ideal multisets, add the centers."""
        if not isinstance(other, ReductiveAlgebra):
            return NotImplemented
        return ReductiveAlgebra(self.simples + other.simples, self.center_dim + other.center_dim)

    def __str__(self) -> str:
        parts = [s.name for s in self.simples]
        if self.center_dim:
            parts.append(f"C^{self.center_dim}")
        return "+".join(parts) if parts else "0"

    def sort_key(self) -> tuple:
        """Canonical ordering: (total dim, length, type list, center)."""
        return (
            dim_of(self),
            self.ell,
            tuple((s.family, s.rank) for s in self.simples),
            self.center_dim,
        )


_EXCEPTIONAL_DIM = {"E6": 78, "E7": 133, "E8": 248, "F4": 52, "G2": 14}
_EXCEPTIONAL_MU = {"E6": 27, "E7": 56, "E8": 248, "F4": 26, "G2": 7}


def dim_simple(t: SimpleType) -> int:
    """Dimension of a simple algebra: A_n (n+1)^2-1, B/C_n 2n^2+n, D_n 2n^2-n."""
    n = t.rank
    if t.family == "A":
        return (n + 1) ** 2 - 1
    if t.family in ("B", "C"):
        return 2 * n * n + n
    if t.family == "D":
        return 2 * n * n - n
    return _EXCEPTIONAL_DIM[t.name]


def dim_of(g: ReductiveAlgebra) -> int:
    """Dimension: sum over the simple ideals plus the center."""
    return sum(dim_simple(s) for s in g.simples) + g.center_dim


def mu_simple(t: SimpleType) -> int:
    """Degree of the smallest nontrivial simple module (re-derived by lierep.weyl)."""
    n = t.rank
    if t.family == "A":
        return n + 1
    if t.family == "B":
        return 4 if n == 2 else 2 * n + 1
    if t.family in ("C", "D"):
        return 2 * n
    return _EXCEPTIONAL_MU[t.name]


def _ceil_two_sqrt(m: int) -> int:
    """Least d >= 0 with d^2 >= 4m, i.e. the exact integer ceil(2*sqrt(m))."""
    if m <= 0:
        return 0
    t = 4 * m
    d = math.isqrt(t)
    if d * d < t:
        d += 1
    return d


def mu_abelian(m: int) -> int:
    """Minimal faithful degree of the abelian algebra C^m.

    0 for m <= 0, 1 for m = 1, and otherwise the least d whose maximal
    commuting matrix family floor(d^2/4)+1 reaches m, which equals
    ceil(2*sqrt(m-1)) computed exactly in integers.
    """
    if m <= 0:
        return 0
    if m == 1:
        return 1
    return _ceil_two_sqrt(m - 1)


def mu(g: ReductiveAlgebra) -> int:
    """Minimal faithful representation degree of a reductive algebra.

    mu(g) = sum_i mu(s_i) + mu_abelian(k - l): one minimal block per
    simple ideal, the first l center lines ride along as scalars, and the
    remaining k - l center dimensions need a commuting nilpotent block.
    """
    return sum(mu_simple(s) for s in g.simples) + mu_abelian(g.center_dim - g.ell)


def mu_a1_plus_center(k: int) -> int:
    """mu(A1 + C^k) = 2 + ceil(2*sqrt(k-2)) for k >= 3 (closed form).

    Cross-checked against the general formula on every call.
    """
    if k < 3:
        raise ValueError(f"k >= 3 required, got {k}")
    value = 2 + _ceil_two_sqrt(k - 2)
    general = mu(ReductiveAlgebra((SimpleType("A", 1),), k))
    if value != general:
        raise AssertionError(f"closed form {value} disagrees with mu {general} for k={k}")
    return value


# Maximal abelian subalgebra dimensions for non-A families, exactly the
# values derivable from the worked examples; everything else is reported
# as unavailable rather than guessed.  Extendable via the `extra` mapping
# (see lierep.classify.load_alpha_table for the file format).
ALPHA_SIMPLE = {
    SimpleType("B", 2): 3,
    SimpleType("C", 3): 6,
    SimpleType("B", 5): 11,
}


def alpha(g: ReductiveAlgebra, extra: Optional[Mapping[SimpleType, int]] = None) -> Optional[int]:
    """Maximal dimension of an abelian subalgebra, or None when unknown.

    alpha is additive over direct sums; alpha(C^k) = k and
    alpha(A_n) = floor((n+1)^2/4) (forced by alpha(gl_m) = floor(m^2/4)+1
    and gl_m = A_{m-1} + C).  Other families are served from ALPHA_SIMPLE
    plus the optional `extra` table.
    """
    total = g.center_dim
    for s in g.simples:
        if s.family == "A":
            total += ((s.rank + 1) ** 2) // 4
        elif extra is not None and s in extra:
            total += extra[s]
        elif s in ALPHA_SIMPLE:
            total += ALPHA_SIMPLE[s]
        else:
            return None
    return total


def alpha_embedding_bound(g: ReductiveAlgebra, n: int) -> bool:
    """Necessary condition for g to embed into gl_n.

    The centralizer of a minimal semisimple block in gl_n is
    gl_{n-mu(s)} + C^l, whose alpha is floor((n-mu(s))^2/4) + 1 + l; the
    center of g must fit inside it.  False certifies non-embeddability.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    mu_ss = sum(mu_simple(s) for s in g.simples)
    if n < mu_ss:
        return False
    m = n - mu_ss
    return g.center_dim <= (m * m) // 4 + 1 + g.ell


_PARTITIONS = [1]


def partition_count(j: int) -> int:
    """Number of integer partitions of j, by Euler's pentagonal recurrence."""
    if j < 0:
        raise ValueError("partition_count requires j >= 0")
    while len(_PARTITIONS) <= j:
        n = len(_PARTITIONS)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * _PARTITIONS[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * _PARTITIONS[n - g2]
            k += 1
        _PARTITIONS.append(total)
    return _PARTITIONS[j]


def p_bound(n: int, k: int) -> int:
    """The nilpotent upper bound p(n,k) = sum_{j<=k} binom(n-j, k-j) p(j)."""
    if n < 1:
        raise ValueError("n >= 1 required")
    if k < 0 or k > n:
        raise ValueError(f"0 <= k <= n required, got k={k}, n={n}")
    return sum(math.comb(n - j, k - j) * partition_count(j) for j in range(k + 1))


@dataclass(frozen=True)
class AsymptoticRow:
    n: int
    max_p: int  # max over k of p(n, k)
    holds: bool  # max_p < (113/40)·2^n/sqrt(n)


@dataclass(frozen=True)
class AsymptoticReport:
    rows: tuple[AsymptoticRow, ...]

    @property
    def violations(self) -> tuple[AsymptoticRow, ...]:
        return tuple(row for row in self.rows if not row.holds)


def asymptotic_check(n_max: int) -> AsymptoticReport:
    """Check max_k p(n,k) < (113/40)·2^n/sqrt(n) for 1 <= n <= n_max.

    The comparison is exact: both sides are positive, so squaring gives
    the equivalent integer inequality 1600·m^2·n < 12769·4^n.
    """
    if n_max < 1:
        raise ValueError("n_max >= 1 required")
    rows = []
    for n in range(1, n_max + 1):
        m = max(p_bound(n, k) for k in range(n + 1))
        holds = 1600 * m * m * n < 12769 * 4**n
        rows.append(AsymptoticRow(n, m, holds))
    return AsymptoticReport(tuple(rows))


def simple_types_with_mu_at_most(n: int) -> list[SimpleType]:
    """All simple types t with mu(t) <= n, canonically sorted."""
    out: list[SimpleType] = []
    out.extend(SimpleType("A", r) for r in range(1, n))  # mu = r+1
    if n >= 4:
        out.append(SimpleType("B", 2))
    out.extend(SimpleType("B", r) for r in range(3, (n - 1) // 2 + 1))  # mu = 2r+1
    out.extend(SimpleType("C", r) for r in range(3, n // 2 + 1))  # mu = 2r
    out.extend(SimpleType("D", r) for r in range(4, n // 2 + 1))  # mu = 2r
    for name, m in _EXCEPTIONAL_MU.items():
        if m <= n:
            out.append(SimpleType.from_name(name))
    return sorted(out)


def semisimple_algebras(types: Iterable[SimpleType], mu_budget: int) -> list[ReductiveAlgebra]:
    """All semisimple algebras over the given types with total mu <= budget."""
    types = sorted(set(types))
    found: list[ReductiveAlgebra] = []

    def rec(start: int, chosen: tuple[SimpleType, ...], used: int) -> None:
        if chosen:
            found.append(ReductiveAlgebra(chosen, 0))
        for i in range(start, len(types)):
            m = mu_simple(types[i])
            if used + m <= mu_budget:
                rec(i, chosen + (types[i],), used + m)

    rec(0, (), 0)
    found.sort(key=ReductiveAlgebra.sort_key)
    return found
