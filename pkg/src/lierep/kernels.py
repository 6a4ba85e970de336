"""Kernel backend selection.

Prefers the compiled Cython extension; falls back to the pure-Python
implementation when the extension is missing or when the environment
variable LIEREP_PURE_PYTHON is set (useful for benchmarking and for
debugging the kernels themselves).
"""

import os

from . import _kernels_py

if os.environ.get("LIEREP_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND

mat_mul = _impl.mat_mul
commutator = _impl.commutator
rank_int = _impl.rank_int
nullspace_dim_int = _impl.nullspace_dim_int
weyl_dim_product = _impl.weyl_dim_product
min_weyl_dim_box = _impl.min_weyl_dim_box
