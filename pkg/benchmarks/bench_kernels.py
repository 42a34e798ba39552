"""Compare the halving-pair kernels: numba, numpy int64, numpy object, rational brute force.

    python benchmarks/bench_kernels.py [--sizes 16 32 64 128 256] [--repeat 3]

Every timed run is also checked against the numba result.
"""
import argparse
import time

import numpy as np

from halving import _kernels
from halving.constructions import GeneratorSpec, generate
from halving.engine import halving_edges_bruteforce
from halving.exact import integer_coordinates

BRUTE_FORCE_LIMIT = 48


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[16, 32, 64, 128, 256])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    if not _kernels.HAVE_NUMBA:
        print("numba unavailable or disabled (HALVING_NO_JIT); numba column repeats numpy")
    # compile outside the timings
    _kernels.halving_pairs_jit(np.arange(4, dtype=np.int64), np.array([0, 3, 1, 7], dtype=np.int64))

    print(f"{'n':>5} {'edges':>6} {'numba ms':>10} {'numpy ms':>10} {'object ms':>10} {'rational ms':>12} {'numpy/numba':>12}")
    for n in args.sizes:
        c = generate(GeneratorSpec("random", n, seed=args.seed, bound=10 * n))
        xs, ys = integer_coordinates(c.points)
        ax, ay = np.array(xs, dtype=np.int64), np.array(ys, dtype=np.int64)
        ox, oy = ax.astype(object), ay.astype(object)

        t_jit, ref = best_of(lambda: _kernels.halving_pairs_jit(ax, ay), args.repeat)
        t_np, r_np = best_of(lambda: _kernels.halving_pairs_numpy(ax, ay), args.repeat)
        t_obj, r_obj = best_of(lambda: _kernels.halving_pairs_numpy(ox, oy), 1)
        assert r_np.tolist() == ref.tolist() and r_obj.tolist() == ref.tolist()
        if n <= BRUTE_FORCE_LIMIT:
            t_bf, g = best_of(lambda: halving_edges_bruteforce(c), 1)
            assert [list(e) for e in g.edges] == ref.tolist()
            bf = f"{t_bf * 1e3:12.2f}"
        else:
            bf = f"{'-':>12}"
        print(f"{n:>5} {len(ref):>6} {t_jit * 1e3:10.2f} {t_np * 1e3:10.2f} {t_obj * 1e3:10.2f} {bf} "
              f"{t_np / t_jit:11.1f}x")


if __name__ == "__main__":
    main()
