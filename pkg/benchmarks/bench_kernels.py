"""Benchmark the compiled kernel extension against the pure-Python fallback.

Run from the repository root after installing the package:

    python3 benchmarks/bench_kernels.py

Workloads mirror the package's real hot spots: the Weyl dimension sweep
that re-derives the mu table entry of E8, the exact rank computation
behind centralizer dimensions, and the pairwise commutator batches used
by representation verification.
"""

import time

from lierep import _kernels_py
from lierep.invariants import SimpleType
from lierep.matrixrep import natural_rep, rep_sum, sym2_rep
from lierep.weyl import root_data

try:
    from lierep import _ckernels
except ImportError:
    _ckernels = None


def centralizer_rows(rep):
    """The linear system [A, rho(x)] = 0 as integer rows (one-off copy)."""
    n = rep.degree
    rows = []
    for img in rep.basis_images:
        x = [list(map(int, row)) for row in img]
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
    return rows


def workloads():
    e8 = root_data(SimpleType("E", 8))
    a2 = natural_rep(SimpleType("A", 2))
    big = rep_sum([a2, sym2_rep(a2)])  # degree 9 representation of A2
    rows = centralizer_rows(big)
    a5 = natural_rep(SimpleType("A", 5))
    mats = [[list(map(int, row)) for row in m] for m in a5.basis_images[:18]]

    def weyl_sweep(k):
        return k.min_weyl_dim_box(e8.weights, e8.rho_pairings, e8.rank, 2)

    def rank(k):
        return k.rank_int(rows)

    def commutators(k):
        total = 0
        for i in range(len(mats)):
            for j in range(i + 1, len(mats)):
                com = k.commutator(mats[i], mats[j])
                total += sum(1 for row in com if any(row))
        return total

    return [
        ("E8 Weyl sweep (cap 2, 120 roots)", weyl_sweep, 3),
        (f"rank of {len(rows)}x81 centralizer system", rank, 3),
        ("153 commutators of 6x6 sl_6 matrices", commutators, 5),
    ]


def time_one(fn, backend, repeats):
    best = None
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(backend)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    backends = [("python", _kernels_py)]
    if _ckernels is not None:
        backends.append(("c", _ckernels))
    else:
        print("compiled extension not built; benchmarking the fallback only\n")
    print(f"{'workload':<42} " + " ".join(f"{name:>10}" for name, _ in backends) + "   speedup")
    for label, fn, repeats in workloads():
        times = []
        results = []
        for _, backend in backends:
            best, result = time_one(fn, backend, repeats)
            times.append(best)
            results.append(result)
        assert all(r == results[0] for r in results), f"backends disagree on {label}"
        cells = " ".join(f"{t * 1e3:9.2f}ms" for t in times)
        speedup = f"{times[0] / times[-1]:8.1f}x" if len(times) > 1 else "      n/a"
        print(f"{label:<42} {cells} {speedup}")


if __name__ == "__main__":
    main()
