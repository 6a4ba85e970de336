"""Minimal faithful representations of complex reductive Lie algebras.

Library layout:

- invariants: SimpleType / ReductiveAlgebra and the closed forms for dim,
  mu, alpha, the embedding certificate, and the nilpotent bound p(n, k);
- weyl: root data and the Weyl dimension formula (the independent oracle
  for the simple mu table);
- repmodel: dimension matrices, the faithfulness criterion, row splitting,
  the exhaustive degree minimizer, and centralizer shapes;
- matrixrep: explicit integer/rational matrix constructions and their
  exact verification;
- classify: enumeration of reductive subalgebras of gl_n and the
  alpha-pruning pipeline;
- cli: the `lierep` command.

Hot kernels live in lierep.kernels, backed by a compiled extension with a
pure-Python fallback (set LIEREP_PURE_PYTHON=1 to force the fallback).
"""

from .expr import AlgebraExpression, ExprError, parse_expr
from .invariants import (
    ReductiveAlgebra,
    SimpleType,
    alpha,
    alpha_embedding_bound,
    asymptotic_check,
    dim_of,
    mu,
    mu_a1_plus_center,
    mu_abelian,
    p_bound,
    partition_count,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraExpression",
    "ExprError",
    "ReductiveAlgebra",
    "SimpleType",
    "alpha",
    "alpha_embedding_bound",
    "asymptotic_check",
    "dim_of",
    "mu",
    "mu_a1_plus_center",
    "mu_abelian",
    "p_bound",
    "parse_expr",
    "partition_count",
    "__version__",
]
