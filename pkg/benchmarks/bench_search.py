"""Time the compiled and pure-Python search kernels on the same compiled problems.

    python3 benchmarks/bench_search.py [--repeat 3]

Both kernels must return identical solution lists and node counts; the
script exits 1 if they differ or the compiled kernel is not built.
"""

import argparse
import sys
import time

from suzukihopf import kernels
from suzukihopf.algebra import AlgebraParams
from suzukihopf.search import coefficient_grid, compile_problem, search_algebra

CASES = [(1, 2, 1, -1), (1, 2, 1, 1), (1, 5, 1, 1), (2, 2, 1, 1), (2, 3, -1, 1), (2, 4, 1, -1)]


def best_of(fn, args, repeat):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return out, best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.compiled_search is None:
        print("compiled kernel not built; run: pip install -e . --no-build-isolation")
        return 1
    print(f"{'params':>16} {'s,t':>5} {'nodes':>9} {'python s':>10} {'cython s':>10} {'speedup':>8}  same")
    ok = True
    for N, n, mu, lam in CASES:
        alg = search_algebra(AlgebraParams(N, n, mu, lam))
        grid = coefficient_grid(alg)
        for s in range(1, N + 1):
            for t in range(1, n):
                prob = compile_problem(alg, s, t, grid)
                if prob.infeasible:
                    continue
                a, tp = best_of(kernels.python_search, prob.kernel_args(), args.repeat)
                b, tc = best_of(kernels.compiled_search, prob.kernel_args(), args.repeat)
                same = a == b
                ok = ok and same
                label = f"({N},{n},{mu:+d},{lam:+d})"
                print(f"{label:>16} {s},{t:<3} {a[1]:>9} {tp:>10.4f} {tc:>10.5f} {tp / max(tc, 1e-9):>8.1f}  {same}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
