"""Weyl dimension formula over explicit root data.

Independent re-derivation of the minimal nontrivial module dimensions:
root systems are generated from Cartan matrices by the standard root
string closure, and dimensions come from the Weyl product formula
prod_{a>0} <lam+rho, a> / <rho, a> evaluated in exact integer arithmetic.

Conventions.  cartan[i][j] = <alpha_i, alpha_j^v> = 2(a_i,a_j)/(a_j,a_j);
a dominant weight is a tuple of nonnegative integers in fundamental
weight coordinates, the zero tuple being the trivial module.  For a
positive root a = sum_j c_j alpha_j the pairing <lam+rho, a> is
proportional to sum_j c_j t_j (lam_j + 1) where t_j are the integer root
norms, so each root contributes the weight vector w_j = c_j t_j used by
the kernels.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import kernels
from .invariants import SimpleType, dim_simple

__all__ = [
    "RootData",
    "root_data",
    "weyl_dim",
    "min_nontrivial_dim",
    "irrep_dims_upto",
    "root_data_json",
]


def _cartan_matrix(t: SimpleType) -> list[list[int]]:
    n = t.rank
    fam = t.family
    cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i: int, j: int, down: int = -1, up: int = -1) -> None:
        cartan[i][j] = down
        cartan[j][i] = up

    if fam in ("A", "B", "C"):
        for i in range(n - 2):
            edge(i, i + 1)
        if n >= 2:
            if fam == "A":
                edge(n - 2, n - 1)
            elif fam == "B":  # last simple root short
                edge(n - 2, n - 1, down=-2, up=-1)
            else:  # C: last simple root long
                edge(n - 2, n - 1, down=-1, up=-2)
    elif fam == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
    elif fam == "E":
        # Bourbaki numbering: chain 1-3-4-5-...-n with 2 attached to 4
        for i in range(2, n - 1):
            edge(i, i + 1)
        edge(0, 2)
        edge(1, 3)
    elif fam == "F":
        edge(0, 1)
        edge(1, 2, down=-2, up=-1)
        edge(2, 3)
    else:  # G2: alpha_1 short, alpha_2 long
        edge(0, 1, down=-1, up=-3)
    return cartan


def _root_norms(cartan: Sequence[Sequence[int]]) -> list[int]:
    """Integer root norms t_i with t_j/t_i = cartan[j][i]/cartan[i][j] on edges."""
    n = len(cartan)
    norms: list[Fraction | None] = [None] * n
    norms[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j != i and cartan[i][j] and norms[j] is None:
                norms[j] = norms[i] * cartan[j][i] / cartan[i][j]
                queue.append(j)
    assert all(v is not None for v in norms), "Dynkin diagram is disconnected"
    denom_lcm = 1
    for v in norms:
        denom_lcm = denom_lcm * v.denominator // _gcd(denom_lcm, v.denominator)
    scaled = [int(v * denom_lcm) for v in norms]
    g = 0
    for v in scaled:
        g = _gcd(g, v)
    return [v // g for v in scaled]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _positive_roots(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Closure of the simple roots under root strings, in simple-root coords."""
    n = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots: set[tuple[int, ...]] = set(simples)
    current = list(simples)
    while current:
        nxt: list[tuple[int, ...]] = []
        for beta in current:
            for i in range(n):
                if beta == simples[i]:
                    continue  # 2*alpha_i is never a root
                # <beta, alpha_i^v>
                pairing = sum(beta[j] * cartan[j][i] for j in range(n) if beta[j])
                # p: how far the string extends below beta
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if probe[i] < 0 or tuple(probe) not in roots:
                        break
                    p += 1
                if p - pairing >= 1:
                    up = list(beta)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in roots:
                        roots.add(cand)
                        nxt.append(cand)
        current = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


@dataclass(frozen=True)
class RootData:
    """Precomputed pairing data for one simple type.

    weights[r][j] = c_j * t_j for the r-th positive root (c = simple-root
    coordinates, t = integer norms); rho_pairings[r] = sum_j weights[r][j]
    is the (scaled) pairing <rho, a>, always positive; denom is the
    product of all rho_pairings, the fixed denominator of the Weyl
    product.
    """

    type: SimpleType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    norms: tuple[int, ...]
    weights: tuple[tuple[int, ...], ...]
    rho_pairings: tuple[int, ...]
    denom: int

    @property
    def rank(self) -> int:
        return self.type.rank


@lru_cache(maxsize=None)
def root_data(t: SimpleType) -> RootData:
    """Build (and cache) the root data of a simple type."""
    cartan = _cartan_matrix(t)
    roots = _positive_roots(cartan)
    expected = (dim_simple(t) - t.rank) // 2
    if len(roots) != expected:
        raise AssertionError(
            f"{t}: root closure produced {len(roots)} positive roots, expected {expected}"
        )
    norms = _root_norms(cartan)
    weights = tuple(tuple(c * norm for c, norm in zip(root, norms)) for root in roots)
    rho = tuple(sum(w) for w in weights)
    if any(v <= 0 for v in rho):
        raise AssertionError(f"{t}: nonpositive rho pairing")
    denom = 1
    for v in rho:
        denom *= v
    return RootData(
        type=t,
        cartan=tuple(tuple(row) for row in cartan),
        positive_roots=tuple(roots),
        norms=tuple(norms),
        weights=weights,
        rho_pairings=rho,
        denom=denom,
    )


def weyl_dim(rd: RootData, lam: Sequence[int]) -> int:
    """Dimension of the irreducible module with highest weight lam."""
    if len(lam) != rd.rank:
        raise ValueError(f"weight length {len(lam)} != rank {rd.rank}")
    if any(not isinstance(c, int) or c < 0 for c in lam):
        raise ValueError(f"dominant weight needs nonnegative integer coords, got {lam!r}")
    return kernels.weyl_dim_product(rd.weights, tuple(c + 1 for c in lam), rd.denom)


def min_nontrivial_dim(rd: RootData) -> int:
    """Dimension of the smallest nontrivial irreducible module.

    Searches all nonzero dominant weights with coordinates <= 2.  The
    Weyl dimension is strictly increasing in every coordinate (each
    factor is nondecreasing and the simple-root factors strictly
    increase), so the minimum sits on a weight with a single coordinate
    equal to 1; the cap of 2 is cheap insurance on top of that.
    """
    best = kernels.min_weyl_dim_box(rd.weights, rd.rho_pairings, rd.rank, 2)
    assert best is not None
    return best


def irrep_dims_upto(rd: RootData, bound: int) -> list[int]:
    """Sorted nontrivial irreducible dimensions <= bound.

    Frontier search over the dominant weight lattice: by coordinatewise
    monotonicity every weight with dimension <= bound is reachable from 0
    by unit steps staying <= bound, so expanding until every single-step
    extension exceeds the bound is exhaustive.
    """
    if bound < 1:
        raise ValueError("bound >= 1 required")
    rank = rd.rank
    zero = (0,) * rank
    seen = {zero}
    queue = deque([zero])
    dims: set[int] = set()
    while queue:
        lam = queue.popleft()
        for i in range(rank):
            nxt = lam[:i] + (lam[i] + 1,) + lam[i + 1 :]
            if nxt in seen:
                continue
            seen.add(nxt)
            d = weyl_dim(rd, nxt)
            if d <= bound:
                dims.add(d)
                queue.append(nxt)
    return sorted(dims)


def root_data_json(rd: RootData) -> str:
    """Inspection export: type, positive roots and rho pairings as JSON."""
    return json.dumps(
        {
            "type": rd.type.name,
            "rank": rd.rank,
            "positive_roots": [list(r) for r in rd.positive_roots],
            "norms": list(rd.norms),
            "rho_pairings": list(rd.rho_pairings),
        },
        indent=2,
    )
