"""Compare the compiled bias-count kernel against the numpy fallback.

Usage: python3 benchmarks/bench_kernel.py
"""

import time

from partbias import _kernel_py
from partbias.core import validate_system

try:
    from partbias import _kernel as _compiled
except ImportError:
    _compiled = None

WORKLOADS = [
    ("single parts, n=2000", {1}, {2}, (), 2000),
    ("corollary 3, n=3000", {1, 2}, {3}, (), 3000),
    ("paper example, n=1500", {2, 3, 6}, {10, 15}, (), 1500),
    ("progression N=6, n=400", {1, 3, 5, 7, 9, 11},
     {2, 4, 6, 8, 10, 12}, (), 400),
]


def time_call(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    print(f"compiled kernel available: {_compiled is not None}")
    print(f"{'workload':<28} {'fallback':>10} {'compiled':>10} {'speedup':>8}")
    for name, r, s, i, n in WORKLOADS:
        sys = validate_system(r, s, i)
        parts = sys.parts
        roles = tuple([1] * len(sys.r) + [-1] * len(sys.s)
                      + [0] * len(sys.i))
        t_py, ref = time_call(_kernel_py.bias_tables, parts, roles, n, True)
        if _compiled is None:
            print(f"{name:<28} {t_py:>9.4f}s {'-':>10} {'-':>8}")
            continue
        t_c, out = time_call(_compiled.bias_tables, parts, roles, n)
        assert out == ref, "kernel mismatch"
        print(f"{name:<28} {t_py:>9.4f}s {t_c:>9.4f}s "
              f"{t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
