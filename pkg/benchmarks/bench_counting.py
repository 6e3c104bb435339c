"""Benchmark the compiled counting kernel against the numpy fallback.

Run from the repository root:

    python benchmarks/bench_counting.py

Builds nothing; whichever kernels are importable get timed on the workloads
that dominate the verification suites (brute-force counts of the space curve
over extension fields, and the genus-2 character sums over F_p^2).
"""

import importlib
import time

from quartica.finitefield import field_tables
from quartica.models import catalog
from quartica.upoly import upoly_q


def _kernels():
    out = {}
    try:
        out["compiled"] = importlib.import_module("quartica._countcore")
    except ImportError:
        pass
    out["pure"] = importlib.import_module("quartica._countpure")
    return out


def bench_intersection(kernel, p, m, repeats=3):
    t = field_tables(p, m)
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        affine = kernel.intersection_pair_count(
            t.digits, t.pows, t.sq, t.cb, t.na, t.logt, p, t.q, 0, t.q
        )
        line = kernel.intersection_line_count(t.sq, t.cb, t.na, t.logt, t.q)
        best = min(best, time.perf_counter() - t0)
        value = affine + line
    return value, best


def bench_genus2_chi(kernel, p, repeats=3):
    import numpy as np

    from quartica.finitefield import scalar_index

    model = catalog("C123")
    S = model.h * model.h + upoly_q([4]) * model.f
    t = field_tables(p, 2)
    coeffs = np.array([scalar_index(t, c) for c in S.coeffs], dtype=np.int32)
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = kernel.chi_poly_sum(
            coeffs, t.digits, t.pows, t.logt, t.expt, t.chi, p, t.q
        )
        best = min(best, time.perf_counter() - t0)
    return value, best


def main():
    kernels = _kernels()
    workloads = [
        ("space curve over F_7^4 (q^2 = 5.76M pairs)", bench_intersection, (7, 4)),
        ("space curve over F_13^3 (q^2 = 4.83M pairs)", bench_intersection, (13, 3)),
        ("genus-2 chi sum over F_103^2 (q = 10609)", bench_genus2_chi, (103,)),
    ]
    print(f"kernels available: {', '.join(kernels)}")
    for title, fn, args in workloads:
        print(f"\n{title}")
        results = {}
        for name, mod in kernels.items():
            value, secs = fn(mod, *args)
            results[name] = (value, secs)
            print(f"  {name:>8}: {secs * 1000:10.1f} ms   result = {value}")
        values = {v for v, _ in results.values()}
        if len(values) != 1:
            raise SystemExit(f"KERNEL MISMATCH on {title}: {results}")
        if len(results) == 2:
            speedup = results["pure"][1] / results["compiled"][1]
            print(f"  speedup: {speedup:.1f}x")


if __name__ == "__main__":
    main()
