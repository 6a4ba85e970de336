"""Shape-level representation model: dimension matrices and decompositions.

A degree-n representation of a semisimple algebra with l simple ideals is
described, up to equivalence, by its n x l matrix of irreducible factor
dimensions.  This module implements the combinatorics on that matrix:
the degree function f, the faithfulness criterion (no all-ones column),
the f-decreasing row splitting and its normalization, an exhaustive
minimizer used as an independent oracle for the additivity of mu, and the
centralizer bookkeeping for decompositions into inequivalent irreducibles.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

__all__ = [
    "DimensionMatrix",
    "RepDecomposition",
    "Summand",
    "CentralizerShape",
    "SearchExhausted",
    "f_value",
    "is_faithful_dm",
    "row_split",
    "normalize",
    "min_faithful_value",
    "select_faithful_subset",
    "centralizer_shape",
    "tilde_transform",
]


@dataclass(frozen=True)
class DimensionMatrix:
    """n x l matrix of irreducible factor dimensions (all entries >= 1).

    When per-column dimension sets are attached (from lierep.weyl), every
    entry > 1 must be an achievable irreducible dimension of its column's
    simple ideal; without them the matrix is purely combinatorial.
    """

    rows: tuple[tuple[int, ...], ...]
    dim_sets: Optional[tuple[frozenset[int], ...]] = None

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or not rows[0]:
            raise ValueError("dimension matrix needs at least one row and one column")
        ell = len(rows[0])
        for r in rows:
            if len(r) != ell:
                raise ValueError("ragged dimension matrix")
            for v in r:
                if not isinstance(v, int) or v < 1:
                    raise ValueError(f"entries must be integers >= 1, got {v!r}")
        if self.dim_sets is not None:
            sets = tuple(frozenset(s) for s in self.dim_sets)
            object.__setattr__(self, "dim_sets", sets)
            if len(sets) != ell:
                raise ValueError("one dimension set per column required")
            for r in rows:
                for j, v in enumerate(r):
                    if v > 1 and v not in sets[j]:
                        raise ValueError(f"entry {v} not an achievable dimension of column {j}")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows])

    @classmethod
    def from_json(cls, text: str) -> "DimensionMatrix":
        data = json.loads(text)
        return cls(tuple(tuple(row) for row in data))


def f_value(dm: DimensionMatrix) -> int:
    """Total degree: sum over rows of the product of the row."""
    total = 0
    for row in dm.rows:
        prod = 1
        for v in row:
            prod *= v
        total += prod
    return total


def is_faithful_dm(dm: DimensionMatrix) -> bool:
    """Faithful iff no column consists only of 1's."""
    return all(any(row[j] > 1 for row in dm.rows) for j in range(dm.n_cols))


def row_split(dm: DimensionMatrix, i: int, j: int, k: int) -> DimensionMatrix:
    """Replace row i by two copies, one with entry k set to 1, one with entry j.

    Requires d_ij > 1 and d_ik > 1 (j != k).  The degree never increases
    (a + b <= a*b for a, b >= 2) and faithfulness is preserved since both
    distinguished entries survive in one of the copies.
    """
    if j == k:
        raise ValueError("need two distinct columns")
    row = dm.rows[i]
    if row[j] <= 1 or row[k] <= 1:
        raise ValueError(f"entries at columns {j} and {k} of row {i} must both exceed 1")
    first = list(row)
    first[k] = 1
    second = list(row)
    second[j] = 1
    new_rows = dm.rows[:i] + (tuple(first), tuple(second)) + dm.rows[i + 1 :]
    return DimensionMatrix(new_rows, dm.dim_sets)


def normalize(dm: DimensionMatrix) -> DimensionMatrix:
    """Split rows until each keeps at most one entry > 1, then drop all-ones rows.

    Deterministic: always splits the leftmost eligible pair in the topmost
    eligible row.  The result is faithful with exactly one entry > 1 per
    row, and f never increases along the way.
    """
    if not is_faithful_dm(dm):
        raise ValueError("normalize requires a faithful dimension matrix")
    current = dm
    i = 0
    while i < current.n_rows:
        big = [j for j, v in enumerate(current.rows[i]) if v > 1]
        if len(big) >= 2:
            current = row_split(current, i, big[0], big[1])
        else:
            i += 1
    kept = tuple(row for row in current.rows if any(v > 1 for v in row))
    return DimensionMatrix(kept, dm.dim_sets)


class SearchExhausted(Exception):
    """No faithful matrix exists within the given row and value bounds."""


def min_faithful_value(
    dim_sets: Sequence[Sequence[int]],
    row_bound: Optional[int] = None,
    value_bound: Optional[int] = None,
    return_witness: bool = False,
):
    """Exact minimum of f over faithful matrices with bounded rows and value.

    Entries of column j are drawn from {1} plus dim_sets[j] (achievable
    irreducible dimensions, all > 1).  Defaults: row_bound = l + 1 (the
    normalized optimum needs at most l rows) and value_bound = the sum of
    the column minima, which always admits the diagonal matrix P.  Raises
    SearchExhausted when no faithful matrix fits the bounds; with
    value_bound >= sum of minima that cannot happen.

    This is a plain branch-and-bound over row multisets; the minimum is a
    pure reduction, independent of enumeration order.
    """
    sets = [sorted(set(s)) for s in dim_sets]
    if not sets:
        raise ValueError("at least one column required")
    for j, s in enumerate(sets):
        if not s:
            raise ValueError(f"dimension set of column {j} is empty")
        if s[0] <= 1:
            raise ValueError(f"dimension sets must contain values > 1 only (column {j})")
    ell = len(sets)
    if row_bound is None:
        row_bound = ell + 1
    base = sum(s[0] for s in sets)
    if value_bound is None:
        value_bound = base
    if row_bound < 1 or value_bound < 1:
        raise ValueError("bounds must be positive")

    # candidate rows with product <= value_bound and at least one entry > 1
    candidates: list[tuple[int, int, tuple[int, ...]]] = []

    def gen(col: int, prod: int, mask: int, entries: list[int]) -> None:
        if col == ell:
            if mask:
                candidates.append((prod, mask, tuple(entries)))
            return
        entries.append(1)
        gen(col + 1, prod, mask, entries)
        entries.pop()
        for d in sets[col]:
            if prod * d > value_bound:
                break
            entries.append(d)
            gen(col + 1, prod * d, mask | (1 << col), entries)
            entries.pop()

    gen(0, 1, 0, [])
    candidates.sort()

    col_min = [s[0] for s in sets]
    full = (1 << ell) - 1
    best: Optional[int] = None
    best_rows: Optional[tuple[tuple[int, ...], ...]] = None

    def remaining_lb(mask: int) -> int:
        # any completion needs one more row whose product covers the
        # hardest uncovered column
        lb = 0
        for j in range(ell):
            if not mask & (1 << j) and col_min[j] > lb:
                lb = col_min[j]
        return lb

    def dfs(start: int, depth: int, total: int, mask: int, chosen: list[int]) -> None:
        nonlocal best, best_rows
        if mask == full:
            if best is None or total < best:
                best = total
                best_rows = tuple(candidates[i][2] for i in chosen)
            return
        if depth == row_bound:
            return
        lb = remaining_lb(mask)
        if total + lb > value_bound:
            return
        if best is not None and total + lb >= best:
            return
        for idx in range(start, len(candidates)):
            prod, m, _ = candidates[idx]
            if total + prod > value_bound:
                break
            if best is not None and total + prod >= best:
                break
            if not (m & ~mask):
                continue  # adds no new coverage, only cost
            chosen.append(idx)
            dfs(idx, depth + 1, total + prod, mask | m, chosen)
            chosen.pop()

    dfs(0, 0, 0, 0, [])
    if best is None:
        raise SearchExhausted(
            f"no faithful matrix with <= {row_bound} rows and f <= {value_bound}"
        )
    if value_bound >= base and best > base:
        raise AssertionError("minimizer missed the diagonal matrix P")
    if return_witness:
        assert best_rows is not None
        return best, DimensionMatrix(best_rows)
    return best


def select_faithful_subset(dm: DimensionMatrix) -> set[int]:
    """At most l row indices whose submatrix is still faithful.

    Deterministic rule: for each column take the first row with an entry
    > 1, then deduplicate.
    """
    if not is_faithful_dm(dm):
        raise ValueError("select_faithful_subset requires a faithful matrix")
    picked: list[int] = []
    for j in range(dm.n_cols):
        for i, row in enumerate(dm.rows):
            if row[j] > 1:
                if i not in picked:
                    picked.append(i)
                break
    return set(picked)


@dataclass(frozen=True)
class Summand:
    """One isotypic component: multiplicity x an irreducible of some degree."""

    multiplicity: int
    degree: int
    trivial: bool = False

    def __post_init__(self) -> None:
        if self.multiplicity < 1 or self.degree < 1:
            raise ValueError("multiplicity and degree must be >= 1")
        if self.trivial and self.degree != 1:
            raise ValueError("the trivial summand has degree 1")


@dataclass(frozen=True)
class RepDecomposition:
    """A completely reducible representation as inequivalent isotypic summands.

    Index 0 is reserved for the trivial summand when present; the listed
    summands are pairwise inequivalent by construction.
    """

    summands: tuple[Summand, ...]

    def __post_init__(self) -> None:
        summands = tuple(self.summands)
        object.__setattr__(self, "summands", summands)
        trivials = [i for i, s in enumerate(summands) if s.trivial]
        if len(trivials) > 1:
            raise ValueError("at most one trivial summand")
        if trivials and trivials[0] != 0:
            raise ValueError("the trivial summand must sit at index 0")

    @property
    def total_degree(self) -> int:
        return sum(s.multiplicity * s.degree for s in self.summands)

    @property
    def trivial_multiplicity(self) -> int:
        if self.summands and self.summands[0].trivial:
            return self.summands[0].multiplicity
        return 0

    @property
    def nontrivial(self) -> tuple[Summand, ...]:
        return tuple(s for s in self.summands if not s.trivial)


def decomposition(parts: Sequence[tuple[int, int]], trivial: int = 0) -> RepDecomposition:
    """Convenience builder: parts are (multiplicity, degree) pairs."""
    summands: list[Summand] = []
    if trivial:
        summands.append(Summand(trivial, 1, trivial=True))
    summands.extend(Summand(m, d) for m, d in parts)
    return RepDecomposition(tuple(summands))


@dataclass(frozen=True)
class CentralizerShape:
    """Centralizer of a decomposition: one gl_{m_j} per isotypic component.

    Multiplicity-one components contribute scalars and are reported in
    abelian_extra; gl_blocks keeps the blocks of size >= 2, sorted
    descending.
    """

    gl_blocks: tuple[int, ...]
    abelian_extra: int

    def __post_init__(self) -> None:
        blocks = tuple(sorted(self.gl_blocks, reverse=True))
        object.__setattr__(self, "gl_blocks", blocks)

    @property
    def dimension(self) -> int:
        return sum(m * m for m in self.gl_blocks) + self.abelian_extra


def centralizer_shape(d: RepDecomposition) -> CentralizerShape:
    """Centralizer shape of a decomposition: gl_{m_j} per summand."""
    blocks = [s.multiplicity for s in d.summands if s.multiplicity >= 2]
    extra = sum(1 for s in d.summands if s.multiplicity == 1)
    return CentralizerShape(tuple(blocks), extra)


def tilde_transform(d: RepDecomposition) -> RepDecomposition:
    """Degree-preserving flattening: all nontrivial multiplicities become 1.

    The trivial multiplicity absorbs the slack, m = m_0 + sum (m_j - 1) d_j,
    so the total degree is unchanged and the centralizer can only grow.
    """
    m = d.trivial_multiplicity + sum((s.multiplicity - 1) * s.degree for s in d.nontrivial)
    summands: list[Summand] = []
    if m:
        summands.append(Summand(m, 1, trivial=True))
    summands.extend(Summand(1, s.degree) for s in d.nontrivial)
    out = RepDecomposition(tuple(summands))
    assert out.total_degree == d.total_degree
    return out
