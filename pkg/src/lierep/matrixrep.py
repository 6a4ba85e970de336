"""Explicit faithful matrix representations in exact rational arithmetic.

Constructions: natural representations of the classical families (split
antidiagonal forms for B/D so every matrix is integral), the commuting
nilpotent block realizing the Jacobson/Schur bound for abelian algebras,
scalar lines, block direct sums, standard block representations, minimal
representations of reductive algebras, Kronecker sums, and assembly of
commuting pairs.  Verification: structure constants are derived from the
matrices themselves by exact linear solves, the homomorphism property and
kernel are checked pairwise, and centralizer dimensions come from exact
nullspace computations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from . import kernels
from .invariants import ReductiveAlgebra, SimpleType, dim_of, dim_simple, mu, mu_abelian

__all__ = [
    "MatrixRep",
    "StructureConstants",
    "VerifyReport",
    "UnsupportedConstruction",
    "natural_rep",
    "schur_abelian_rep",
    "direct_sum",
    "add_scalar_line",
    "standard_block_rep",
    "reductive_min_rep",
    "kron_sum",
    "assemble_commuting",
    "verify_rep",
    "structure_constants_of",
    "centralizer_dim_numeric",
    "a1_irrep",
    "dual_rep",
    "sym2_rep",
    "adjoint_rep",
    "rep_sum",
    "rep_to_json_dict",
    "rep_from_json_dict",
]

Rational = Union[int, Fraction]
Matrix = tuple[tuple[Rational, ...], ...]


class UnsupportedConstruction(Exception):
    """Requested an explicit matrix model we do not ship (E/F/G families)."""


def _freeze(m: Sequence[Sequence[Rational]]) -> Matrix:
    return tuple(tuple(row) for row in m)


def _zeros(rows: int, cols: Optional[int] = None) -> list[list[int]]:
    if cols is None:
        cols = rows
    return [[0] * cols for _ in range(rows)]


def _identity(n: int) -> list[list[int]]:
    m = _zeros(n)
    for i in range(n):
        m[i][i] = 1
    return m


def _vec(m: Sequence[Sequence[Rational]]) -> list[Rational]:
    out: list[Rational] = []
    for row in m:
        out.extend(row)
    return out


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _integer_rows(vectors: Iterable[Sequence[Rational]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank/nullspace safe)."""
    out = []
    for vec in vectors:
        mult = 1
        for v in vec:
            if isinstance(v, Fraction) and v.denominator != 1:
                mult = _lcm(mult, v.denominator)
        out.append([int(v * mult) for v in vec] if mult != 1 else [int(v) for v in vec])
    return out


def _integer_matrix(m: Sequence[Sequence[Rational]]) -> list[list[int]]:
    """Scale a whole matrix to integers (scaling does not move centralizers)."""
    mult = 1
    for row in m:
        for v in row:
            if isinstance(v, Fraction) and v.denominator != 1:
                mult = _lcm(mult, v.denominator)
    if mult == 1:
        return [[int(v) for v in row] for row in m]
    return [[int(v * mult) for v in row] for row in m]


@dataclass(frozen=True)
class MatrixRep:
    """A linear representation: one exact-rational matrix per basis element.

    The abstract algebra is only known through its ReductiveAlgebra
    description; its bracket is pinned down by structure_constants_of,
    which re-derives the table from the images themselves.
    """

    degree: int
    algebra: ReductiveAlgebra
    basis_images: tuple[Matrix, ...]
    basis_labels: tuple[str, ...]

    def __post_init__(self) -> None:
        images = tuple(_freeze(m) for m in self.basis_images)
        object.__setattr__(self, "basis_images", images)
        object.__setattr__(self, "basis_labels", tuple(self.basis_labels))
        n = self.degree
        if n < 0:
            raise ValueError("degree must be nonnegative")
        expected = dim_of(self.algebra)
        if len(images) != expected:
            raise ValueError(
                f"need {expected} basis images for {self.algebra}, got {len(images)}"
            )
        if len(self.basis_labels) != len(images):
            raise ValueError("one label per basis image required")
        for m in images:
            if len(m) != n or any(len(row) != n for row in m):
                raise ValueError(f"images must be {n}x{n}")
            for row in m:
                for v in row:
                    if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
                        raise ValueError(f"entries must be exact rationals, got {v!r}")

    @property
    def dim(self) -> int:
        return len(self.basis_images)


# ---------------------------------------------------------------------------
# classical natural representations


def _sl_basis(n_plus_1: int) -> tuple[list[list[list[int]]], list[str]]:
    """Traceless matrices: raising E_ij, Cartan H_i, lowering E_ji."""
    N = n_plus_1
    images, labels = [], []
    uppers = [(i, j) for i in range(N) for j in range(i + 1, N)]
    for i, j in uppers:
        m = _zeros(N)
        m[i][j] = 1
        images.append(m)
        labels.append(f"E_{i + 1}_{j + 1}")
    for i in range(N - 1):
        m = _zeros(N)
        m[i][i] = 1
        m[i + 1][i + 1] = -1
        images.append(m)
        labels.append(f"H_{i + 1}")
    for i, j in uppers:
        m = _zeros(N)
        m[j][i] = 1
        images.append(m)
        labels.append(f"E_{j + 1}_{i + 1}")
    return images, labels


def _sp_basis(n: int) -> tuple[list[list[list[int]]], list[str]]:
    """sp_2n for the form [[0, I], [-I, 0]]: blocks [[A, B], [C, -A^T]], B/C symmetric."""
    N = 2 * n
    images, labels = [], []
    for i in range(n):
        for j in range(n):
            m = _zeros(N)
            m[i][j] = 1
            m[n + j][n + i] = -1
            images.append(m)
            labels.append(f"A_{i + 1}_{j + 1}")
    for i in range(n):
        for j in range(i, n):
            m = _zeros(N)
            m[i][n + j] = 1
            if i != j:
                m[j][n + i] = 1
            images.append(m)
            labels.append(f"B_{i + 1}_{j + 1}")
    for i in range(n):
        for j in range(i, n):
            m = _zeros(N)
            m[n + i][j] = 1
            if i != j:
                m[n + j][i] = 1
            images.append(m)
            labels.append(f"C_{i + 1}_{j + 1}")
    return images, labels


def _so_basis(N: int) -> tuple[list[list[list[int]]], list[str]]:
    """so_N for the antidiagonal form: X_ij = -X_{N+1-j, N+1-i}, all integer."""
    images, labels = [], []
    for i in range(N):
        for j in range(N):
            if i + j <= N - 2:
                m = _zeros(N)
                m[i][j] += 1
                m[N - 1 - j][N - 1 - i] -= 1
                images.append(m)
                labels.append(f"M_{i + 1}_{j + 1}")
    return images, labels


def natural_rep(t: SimpleType) -> MatrixRep:
    """Minimal-degree faithful representation of a classical simple type.

    A_n is sl_{n+1}; C_n is sp_2n; B_n (n >= 3) and D_n are the split
    antidiagonal orthogonal algebras; B2 uses the 4-dimensional symplectic
    model (B2 = C2).  Exceptional families raise UnsupportedConstruction.
    """
    if not t.is_classical:
        raise UnsupportedConstruction(f"no explicit matrix model shipped for {t}")
    fam, n = t.family, t.rank
    if fam == "A":
        degree = n + 1
        images, labels = _sl_basis(n + 1)
    elif fam == "B" and n == 2:
        degree = 4
        images, labels = _sp_basis(2)
    elif fam == "B":
        degree = 2 * n + 1
        images, labels = _so_basis(2 * n + 1)
    elif fam == "C":
        degree = 2 * n
        images, labels = _sp_basis(n)
    else:  # D
        degree = 2 * n
        images, labels = _so_basis(2 * n)
    assert len(images) == dim_simple(t)
    return MatrixRep(degree, ReductiveAlgebra((t,), 0), tuple(images), tuple(labels))


def schur_abelian_rep(m: int) -> MatrixRep:
    """Minimal faithful representation of the abelian algebra C^m.

    Degree d = mu_abelian(m): the identity plus m-1 matrices, each with a
    single 1 inside the strictly off-diagonal floor(d/2) x ceil(d/2)
    block.  All images commute (the block squares to zero) and the
    floor(d^2/4)+1 slots realize the Jacobson/Schur bound.
    """
    if m < 1:
        raise ValueError("m >= 1 required")
    d = mu_abelian(m)
    images: list[list[list[int]]] = [_identity(d)]
    labels = ["I"]
    half = d // 2
    slots = [(i, j) for i in range(half) for j in range(half, d)]
    assert len(slots) >= m - 1
    for t in range(m - 1):
        i, j = slots[t]
        mat = _zeros(d)
        mat[i][j] = 1
        images.append(mat)
        labels.append(f"N_{t + 1}")
    return MatrixRep(d, ReductiveAlgebra((), m), tuple(images), tuple(labels))


def direct_sum(reps: Sequence[MatrixRep]) -> MatrixRep:
    """Block-diagonal sum: a representation of the direct sum of the algebras."""
    reps = list(reps)
    if not reps:
        raise ValueError("direct_sum of an empty list")
    if len(reps) == 1:
        return reps[0]
    total = sum(r.degree for r in reps)
    algebra = ReductiveAlgebra()
    for r in reps:
        algebra = algebra + r.algebra
    images: list[list[list[Rational]]] = []
    labels: list[str] = []
    offset = 0
    for bi, rep in enumerate(reps):
        for img, lab in zip(rep.basis_images, rep.basis_labels):
            m = _zeros(total)
            for i in range(rep.degree):
                for j in range(rep.degree):
                    if img[i][j]:
                        m[offset + i][offset + j] = img[i][j]
            images.append(m)
            labels.append(f"b{bi}.{lab}")
        offset += rep.degree
    return MatrixRep(total, algebra, tuple(images), tuple(labels))


def add_scalar_line(rep: MatrixRep) -> MatrixRep:
    """Adjoin the identity matrix: a faithful rep of algebra + C, same degree.

    Only valid for centerless algebras; the identity can never lie in the
    image of one (it would be a nonzero central element), and we assert
    the images stay independent after adjoining it.
    """
    if rep.algebra.center_dim:
        raise ValueError("add_scalar_line requires a centerless (semisimple) algebra")
    new_algebra = ReductiveAlgebra(rep.algebra.simples, 1)
    images = rep.basis_images + (_freeze(_identity(rep.degree)),)
    labels = rep.basis_labels + ("Z",)
    out = MatrixRep(rep.degree, new_algebra, images, labels)
    rows = _integer_rows(_vec(m) for m in out.basis_images)
    if kernels.rank_int(rows) != out.dim:
        raise AssertionError("scalar line collapsed the representation kernel")
    return out


def standard_block_rep(algebra: ReductiveAlgebra, n: int) -> MatrixRep:
    """m copies of the trivial rep plus one minimal block per simple ideal.

    m = n - mu(algebra) leading zero rows/columns; requires a semisimple
    algebra with classical ideals and n >= mu(algebra).
    """
    if algebra.center_dim:
        raise ValueError("standard block representation is defined for semisimple algebras")
    need = mu(algebra)
    if n < need:
        raise ValueError(f"degree {n} below mu = {need}")
    blocks = [natural_rep(s) for s in algebra.simples]
    images: list[list[list[Rational]]] = []
    labels: list[str] = []
    offset = n - need
    for bi, rep in enumerate(blocks):
        for img, lab in zip(rep.basis_images, rep.basis_labels):
            m = _zeros(n)
            for i in range(rep.degree):
                for j in range(rep.degree):
                    if img[i][j]:
                        m[offset + i][offset + j] = img[i][j]
            images.append(m)
            labels.append(f"b{bi}.{lab}" if len(blocks) > 1 else lab)
        offset += rep.degree
    return MatrixRep(n, algebra, tuple(images), tuple(labels))


def reductive_min_rep(g: ReductiveAlgebra) -> MatrixRep:
    """Minimal faithful representation of a reductive algebra, degree mu(g).

    Composition: the first min(k, l) simple blocks carry a scalar line,
    the remaining k - l center dimensions (if positive) go into one
    commuting nilpotent block appended last.  Classical ideals only.
    """
    blocks: list[MatrixRep] = []
    scalars = min(g.center_dim, g.ell)
    for idx, s in enumerate(g.simples):
        rep = natural_rep(s)
        if idx < scalars:
            rep = add_scalar_line(rep)
        blocks.append(rep)
    remaining = g.center_dim - g.ell
    if remaining > 0:
        blocks.append(schur_abelian_rep(remaining))
    if not blocks:
        return MatrixRep(0, g, (), ())
    out = direct_sum(blocks)
    assert out.algebra == g, f"assembled {out.algebra}, wanted {g}"
    assert out.degree == mu(g)
    return out


def _kron(a: Sequence[Sequence[Rational]], b: Sequence[Sequence[Rational]]) -> list[list[Rational]]:
    ra, ca = len(a), len(a[0]) if a else 0
    rb, cb = len(b), len(b[0]) if b else 0
    out = _zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            v = a[i][j]
            if v:
                for p in range(rb):
                    for q in range(cb):
                        if b[p][q]:
                            out[i * rb + p][j * cb + q] = v * b[p][q]
    return out


def kron_sum(r1: MatrixRep, r2: MatrixRep) -> MatrixRep:
    """Tensor-product module of a direct sum: x -> x (x) I, y -> I (x) y."""
    n1, n2 = r1.degree, r2.degree
    id1, id2 = _identity(n1), _identity(n2)
    images: list[list[list[Rational]]] = []
    labels: list[str] = []
    for img, lab in zip(r1.basis_images, r1.basis_labels):
        images.append(_kron(img, id2))
        labels.append(f"b0.{lab}")
    for img, lab in zip(r2.basis_images, r2.basis_labels):
        images.append(_kron(id1, img))
        labels.append(f"b1.{lab}")
    return MatrixRep(n1 * n2, r1.algebra + r2.algebra, tuple(images), tuple(labels))


def assemble_commuting(r1: MatrixRep, r2: MatrixRep) -> MatrixRep:
    """Same-degree representation of algebra1 + algebra2 from a commuting pair.

    Requires every image of r1 to commute with every image of r2 and the
    algebra of r1 to have trivial center; faithful whenever both inputs
    are.  The offending pair is reported when commutation fails.
    """
    if r1.degree != r2.degree:
        raise ValueError(f"degrees differ: {r1.degree} vs {r2.degree}")
    if r2.algebra.is_zero:
        return r1
    if r1.algebra.is_zero:
        return r2
    if r1.algebra.center_dim:
        raise ValueError("the first algebra must have trivial center")
    for img1, lab1 in zip(r1.basis_images, r1.basis_labels):
        a = [list(row) for row in img1]
        for img2, lab2 in zip(r2.basis_images, r2.basis_labels):
            b = [list(row) for row in img2]
            com = kernels.commutator(a, b)
            if any(any(row) for row in com):
                raise ValueError(f"images do not commute: [{lab1}, {lab2}] != 0")
    images = tuple(r1.basis_images) + tuple(r2.basis_images)
    labels = tuple(f"b0.{lab}" for lab in r1.basis_labels) + tuple(
        f"b1.{lab}" for lab in r2.basis_labels
    )
    return MatrixRep(r1.degree, r1.algebra + r2.algebra, images, labels)


# ---------------------------------------------------------------------------
# structure constants and verification


@dataclass
class StructureConstants:
    """Bracket table of an abstract basis: [x_a, x_b] = sum_c coeff x_c.

    Stored sparsely for a < b only, so antisymmetry holds by construction;
    the Jacobi identity is checked when the table is built.
    """

    dim: int
    table: dict[tuple[int, int], dict[int, Rational]]

    def __post_init__(self) -> None:
        for (a, b), entry in self.table.items():
            if not 0 <= a < b < self.dim:
                raise ValueError(f"table keys must satisfy 0 <= a < b < dim, got {(a, b)}")
            if not entry:
                raise ValueError("empty table entries should be omitted")
        self._check_jacobi()

    def bracket(self, a: int, b: int) -> dict[int, Rational]:
        """Sparse coordinates of [x_a, x_b]."""
        if a == b:
            return {}
        if a < b:
            return dict(self.table.get((a, b), {}))
        return {c: -v for c, v in self.table.get((b, a), {}).items()}

    def _check_jacobi(self) -> None:
        # A triple needs checking only when some term of the cyclic sum
        # can be nonzero, i.e. when the third index interacts with the
        # pair or with the support of its bracket; adjacency sets keep
        # this near-linear for sparse (Chevalley-like) tables.  Every
        # triple with at least one nonzero pair bracket is reached from
        # that pair, so nontrivial identities are never skipped.
        neighbors: dict[int, set[int]] = {}
        for (a, b) in self.table:
            neighbors.setdefault(a, set()).add(b)
            neighbors.setdefault(b, set()).add(a)
        empty: set[int] = set()
        seen: set[tuple[int, int, int]] = set()
        for (a, b), entry in self.table.items():
            candidates: set[int] = set()
            candidates |= neighbors.get(a, empty)
            candidates |= neighbors.get(b, empty)
            for e in entry:
                candidates |= neighbors.get(e, empty)
            for c in candidates:
                if c == a or c == b:
                    continue
                triple = tuple(sorted((a, b, c)))
                if triple in seen:
                    continue
                seen.add(triple)
                x, y, z = triple
                acc: dict[int, Rational] = {}
                for i, j, k in ((x, y, z), (y, z, x), (z, x, y)):
                    for e, ce in self.bracket(j, k).items():
                        for f, cf in self.bracket(i, e).items():
                            acc[f] = acc.get(f, 0) + ce * cf
                if any(acc.values()):
                    raise AssertionError(f"Jacobi identity fails on basis triple {triple}")


def _axpy(dst: dict, src: dict, factor: Fraction) -> None:
    """dst += factor * src, dropping exact zeros (sparse vectors as dicts)."""
    for key, value in src.items():
        acc = dst.get(key, 0) + factor * value
        if acc:
            dst[key] = acc
        else:
            dst.pop(key, None)


class _SpanSolver:
    """Sparse reduced row echelon form with coefficient tracking.

    Natural-representation bases and their commutators have a handful of
    nonzero entries each, so rows are kept as column->value dicts; solves
    touch only the pivots actually present in the target.
    """

    def __init__(self, vectors: Sequence[Sequence[Rational]]):
        self.n_inputs = len(vectors)
        self.rows: list[dict[int, Fraction]] = []
        self.coeffs: list[dict[int, Fraction]] = []
        self.pivot_row: dict[int, int] = {}
        for idx, vec in enumerate(vectors):
            row = {c: Fraction(v) for c, v in enumerate(vec) if v}
            coeff = {idx: Fraction(1)}
            self._reduce(row, coeff)
            if not row:
                continue
            piv = min(row)
            inv = 1 / row[piv]
            row = {c: v * inv for c, v in row.items()}
            coeff = {i: v * inv for i, v in coeff.items()}
            for r, stored in enumerate(self.rows):
                f = stored.get(piv)
                if f:
                    _axpy(stored, row, -f)
                    _axpy(self.coeffs[r], coeff, -f)
            self.pivot_row[piv] = len(self.rows)
            self.rows.append(row)
            self.coeffs.append(coeff)

    def _reduce(self, row: dict[int, Fraction], coeff: dict[int, Fraction]) -> None:
        # stored rows carry no other pivot columns, so each elimination
        # permanently removes one pivot from the work row
        while True:
            piv = next((c for c in row if c in self.pivot_row), None)
            if piv is None:
                return
            r = self.pivot_row[piv]
            f = row[piv]
            _axpy(row, self.rows[r], -f)
            _axpy(coeff, self.coeffs[r], -f)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def solve(self, target: Sequence[Rational]) -> Optional[dict[int, Fraction]]:
        """Sparse coordinates of target in the inputs, or None if outside the span."""
        row = {c: Fraction(v) for c, v in enumerate(target) if v}
        x: dict[int, Fraction] = {}
        while row:
            piv = next((c for c in row if c in self.pivot_row), None)
            if piv is None:
                return None
            r = self.pivot_row[piv]
            f = row[piv]
            _axpy(row, self.rows[r], -f)
            _axpy(x, self.coeffs[r], f)
        return x


def _as_exact(f: Fraction) -> Rational:
    return int(f) if f.denominator == 1 else f


def structure_constants_of(rep: MatrixRep) -> StructureConstants:
    """Derive the bracket table of the basis from the matrices themselves.

    The images must be linearly independent (otherwise they cannot serve
    as a defining basis) and closed under commutators; antisymmetry holds
    by construction and Jacobi is asserted by StructureConstants.
    """
    d = rep.dim
    vectors = [_vec(m) for m in rep.basis_images]
    solver = _SpanSolver(vectors)
    if solver.rank != d:
        raise ValueError("basis images are linearly dependent")
    images = [[list(row) for row in m] for m in rep.basis_images]
    table: dict[tuple[int, int], dict[int, Rational]] = {}
    for a in range(d):
        for b in range(a + 1, d):
            com = kernels.commutator(images[a], images[b])
            coords = solver.solve(_vec(com))
            if coords is None:
                raise ValueError(
                    f"not closed under brackets: [{rep.basis_labels[a]}, {rep.basis_labels[b]}]"
                )
            entry = {c: _as_exact(v) for c, v in coords.items() if v}
            if entry:
                table[(a, b)] = entry
    return StructureConstants(d, table)


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of verify_rep: bracket mismatches and the kernel dimension."""

    degree: int
    algebra_dim: int
    kernel_dim: int
    bracket_failures: tuple[tuple[str, str], ...]

    @property
    def ok(self) -> bool:
        return self.kernel_dim == 0 and not self.bracket_failures

    def summary(self) -> str:
        if self.ok:
            return f"faithful, degree {self.degree}"
        parts = []
        if self.bracket_failures:
            pairs = ", ".join(f"[{a}, {b}]" for a, b in self.bracket_failures[:5])
            more = "" if len(self.bracket_failures) <= 5 else ", ..."
            parts.append(f"bracket mismatches: {pairs}{more}")
        if self.kernel_dim:
            parts.append(f"kernel dimension {self.kernel_dim}")
        return "; ".join(parts)


def verify_rep(rep: MatrixRep, sc: StructureConstants) -> VerifyReport:
    """Check the homomorphism property against sc and that the kernel is 0.

    [rho(x_a), rho(x_b)] must equal rho([x_a, x_b]) for every pair, in
    exact arithmetic; the kernel is trivial iff the images span a space of
    dimension dim(g).
    """
    d = rep.dim
    if sc.dim != d:
        raise ValueError(f"structure constants have dim {sc.dim}, representation has {d}")
    n = rep.degree
    images = [[list(row) for row in m] for m in rep.basis_images]
    failures: list[tuple[str, str]] = []
    for a in range(d):
        for b in range(a + 1, d):
            lhs = kernels.commutator(images[a], images[b])
            rhs: list[list[Rational]] = _zeros(n)
            for c, coeff in sc.bracket(a, b).items():
                img = images[c]
                for i in range(n):
                    for j in range(n):
                        if img[i][j]:
                            rhs[i][j] += coeff * img[i][j]
            if lhs != rhs:
                failures.append((rep.basis_labels[a], rep.basis_labels[b]))
    if d:
        rows = _integer_rows(_vec(m) for m in rep.basis_images)
        kernel = d - kernels.rank_int(rows)
    else:
        kernel = 0
    return VerifyReport(n, d, kernel, tuple(failures))


def centralizer_dim_numeric(rep: MatrixRep) -> int:
    """Dimension of {A : [A, rho(x)] = 0 for all basis x}, by exact rank.

    The commutation constraints are linear in the n^2 unknown entries of
    A; scaling an image by a nonzero constant does not change them, so
    rational images are cleared to integers first.
    """
    n = rep.degree
    if n == 0:
        return 0
    rows: list[list[int]] = []
    for img in rep.basis_images:
        x = _integer_matrix(img)
        for i in range(n):
            for j in range(n):
                row = [0] * (n * n)
                for q in range(n):
                    if x[q][j]:
                        row[i * n + q] += x[q][j]
                for p in range(n):
                    if x[i][p]:
                        row[p * n + j] -= x[i][p]
                if any(row):
                    rows.append(row)
    if not rows:
        return n * n
    return n * n - kernels.rank_int(rows)


# ---------------------------------------------------------------------------
# irreducible building blocks used by the centralizer and tensor tests


def a1_irrep(highest_weight: int) -> MatrixRep:
    """Irreducible A1 module of highest weight m (degree m+1), basis (e, h, f).

    e raises with weight coefficients k(m-k+1), f lowers with 1, h is
    diagonal; a1_irrep(1) coincides with natural_rep(A1).
    """
    m = highest_weight
    if m < 0:
        raise ValueError("highest weight must be >= 0")
    d = m + 1
    e = _zeros(d)
    h = _zeros(d)
    f = _zeros(d)
    for k in range(d):
        h[k][k] = m - 2 * k
        if k >= 1:
            e[k - 1][k] = k * (m - k + 1)
        if k + 1 < d:
            f[k + 1][k] = 1
    return MatrixRep(
        d,
        ReductiveAlgebra((SimpleType("A", 1),), 0),
        (_freeze(e), _freeze(h), _freeze(f)),
        ("E_1_2", "H_1", "E_2_1"),
    )


def dual_rep(rep: MatrixRep) -> MatrixRep:
    """Contragredient representation: x -> -rho(x)^T (same basis order)."""
    n = rep.degree
    images = tuple(
        _freeze([[-m[j][i] for j in range(n)] for i in range(n)]) for m in rep.basis_images
    )
    return MatrixRep(n, rep.algebra, images, rep.basis_labels)


def sym2_rep(rep: MatrixRep) -> MatrixRep:
    """Symmetric square: action on e_i . e_j by the Leibniz rule."""
    n = rep.degree
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    index = {p: t for t, p in enumerate(pairs)}
    deg = len(pairs)
    images = []
    for x in rep.basis_images:
        m = _zeros(deg)
        for t, (i, j) in enumerate(pairs):
            for p in range(n):
                v = x[p][i]
                if v:
                    m[index[(p, j) if p <= j else (j, p)]][t] += v
                v = x[p][j]
                if v:
                    m[index[(i, p) if i <= p else (p, i)]][t] += v
        images.append(_freeze(m))
    return MatrixRep(deg, rep.algebra, tuple(images), rep.basis_labels)


def adjoint_rep(rep: MatrixRep) -> MatrixRep:
    """Adjoint representation on the basis of rep: ad(x_a) from the bracket table."""
    sc = structure_constants_of(rep)
    d = rep.dim
    images = []
    for a in range(d):
        m = _zeros(d)
        for b in range(d):
            for c, coeff in sc.bracket(a, b).items():
                m[c][b] += coeff
        images.append(_freeze(m))
    return MatrixRep(d, rep.algebra, tuple(images), rep.basis_labels)


def rep_sum(
    reps: Sequence[MatrixRep],
    mults: Optional[Sequence[int]] = None,
    trivial: int = 0,
) -> MatrixRep:
    """Direct sum of representations of one algebra, with multiplicities.

    All summands must present their images in the same abstract basis
    order (true for everything built from natural_rep / a1_irrep and the
    dual/sym2/adjoint constructions).  `trivial` prepends that many zero
    rows and columns, the trivial isotypic block.
    """
    reps = list(reps)
    if not reps:
        raise ValueError("rep_sum needs at least one representation")
    algebra = reps[0].algebra
    for r in reps:
        if r.algebra != algebra:
            raise ValueError("rep_sum requires representations of one algebra")
    if mults is None:
        mults = [1] * len(reps)
    if len(mults) != len(reps) or any(m < 1 for m in mults):
        raise ValueError("one positive multiplicity per summand required")
    if trivial < 0:
        raise ValueError("trivial multiplicity must be >= 0")
    total = trivial + sum(m * r.degree for m, r in zip(mults, reps))
    images = []
    for a in range(reps[0].dim):
        m = _zeros(total)
        offset = trivial
        for mult, r in zip(mults, reps):
            img = r.basis_images[a]
            for _ in range(mult):
                for i in range(r.degree):
                    for j in range(r.degree):
                        if img[i][j]:
                            m[offset + i][offset + j] = img[i][j]
                offset += r.degree
        images.append(_freeze(m))
    return MatrixRep(total, algebra, tuple(images), reps[0].basis_labels)


# ---------------------------------------------------------------------------
# JSON representation files (output of `construct`, input of `verify`)


def _encode_entry(v: Rational):
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return int(v)
        return f"{v.numerator}/{v.denominator}"
    return v


def _decode_entry(v) -> Rational:
    if isinstance(v, int) and not isinstance(v, bool):
        return v
    if isinstance(v, str):
        num, _, den = v.partition("/")
        try:
            if den:
                return Fraction(int(num), int(den))
            return int(num)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational entry {v!r}") from exc
    raise ValueError(f"matrix entries must be integers or 'p/q' strings, got {v!r}")


def rep_to_json_dict(rep: MatrixRep) -> dict:
    return {
        "algebra": str(rep.algebra),
        "degree": rep.degree,
        "basis": [
            {"label": lab, "matrix": [[_encode_entry(v) for v in row] for row in img]}
            for lab, img in zip(rep.basis_labels, rep.basis_images)
        ],
    }


def rep_from_json_dict(data: dict) -> MatrixRep:
    from .expr import parse_expr  # local import: expr depends on invariants only

    if not isinstance(data, dict):
        raise ValueError("representation file must be a JSON object")
    for key in ("algebra", "degree", "basis"):
        if key not in data:
            raise ValueError(f"representation file misses the {key!r} field")
    algebra = parse_expr(data["algebra"])
    degree = data["degree"]
    if not isinstance(degree, int) or degree < 0:
        raise ValueError(f"bad degree {degree!r}")
    images = []
    labels = []
    for item in data["basis"]:
        labels.append(str(item.get("label", f"x{len(labels)}")))
        matrix = item["matrix"]
        images.append(tuple(tuple(_decode_entry(v) for v in row) for row in matrix))
    return MatrixRep(degree, algebra, tuple(images), tuple(labels))
