"""Benchmark the enumeration kernels: compiled extension vs pure Python.

Runs representative workloads from the package (membership-pattern cone
sections, string polytope slices, semigroup fibers) through both
backends, checks the outputs agree, and prints a timing table.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from qtoric import _kernels_py

try:
    from qtoric import _kernels
except ImportError:
    _kernels = None


def chain_cone_rows(bound):
    # the 5-variable cone of monotone 0/1 patterns, graded by first coordinate
    rows = [
        ((1, -1, 0, 0, 0), 0),
        ((0, 1, -1, 0, 0), 0),
        ((0, 1, 0, -1, 0), 0),
        ((0, 0, 1, 0, -1), 0),
        ((0, 0, 0, 1, -1), 0),
        ((-1, 0, 0, 0, 0), bound),
    ]
    # bounds cascade from the first coordinate down, so assign it first
    return 5, rows, -1, (0, 1, 2, 3, 4)


def string_slice_rows(r1, r2):
    # A2 string polytope at a large dominant weight
    rows = [
        ((0, 1, -1), 0),
        ((0, 0, -1), r1),
        ((0, -1, 1), r2),
        ((-1, 1, -2), r1),
    ]
    return 3, rows, -1, (2, 1, 0)


def fiber_workload(degree):
    # monotone 0/1 generators, fiber over a deep diagonal point
    gens = [
        (1, 0, 0, 0, 0),
        (1, 1, 0, 0, 0),
        (1, 1, 1, 0, 0),
        (1, 1, 0, 1, 0),
        (1, 1, 1, 1, 0),
        (1, 1, 1, 1, 1),
    ]
    target = (degree, degree, degree // 2, degree // 2, degree // 3)
    return gens, target, -1


WORKLOADS = [
    ("affine: pattern cone, sum <= 14", "affine_points", chain_cone_rows(14)),
    ("affine: pattern cone, sum <= 18", "affine_points", chain_cone_rows(18)),
    ("affine: string slice r=(40,40)", "affine_points", string_slice_rows(40, 40)),
    ("affine: string slice r=(80,60)", "affine_points", string_slice_rows(80, 60)),
    ("fiber: monotone target, deg 24", "fiber_solutions", fiber_workload(24)),
    ("fiber: monotone target, deg 36", "fiber_solutions", fiber_workload(36)),
]


def run_one(impl, fn, args, repeat):
    best = None
    result = None
    for _ in range(repeat):
        started = time.perf_counter()
        result = getattr(impl, fn)(*args)
        elapsed = time.perf_counter() - started
        if best is None or elapsed < best:
            best = elapsed
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best of N runs")
    opts = parser.parse_args()

    if _kernels is None:
        print("compiled kernels are not built; nothing to compare")
        return

    width = max(len(name) for name, _, _ in WORKLOADS)
    print(f"{'workload':<{width}}  {'points':>7}  {'python':>9}  {'compiled':>9}  speedup")
    for name, fn, args in WORKLOADS:
        t_py, out_py = run_one(_kernels_py, fn, args, opts.repeat)
        t_c, out_c = run_one(_kernels, fn, args, opts.repeat)
        assert out_py == out_c, f"backend mismatch on {name}"
        print(
            f"{name:<{width}}  {len(out_py):>7}  {t_py:>8.4f}s  {t_c:>8.4f}s  "
            f"{t_py / t_c:>6.1f}x"
        )


if __name__ == "__main__":
    main()
