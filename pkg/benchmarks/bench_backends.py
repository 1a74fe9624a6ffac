"""Time the compiled kernels against their plain NumPy twins.

Run as a script:

    python3 benchmarks/bench_backends.py [--repeats N]

Each workload is timed best-of-N after a warmup call, so JIT compilation
never lands inside a measured run. With numba unavailable only the numpy
column is shown.
"""

import argparse
import time

import numpy as np

from kernelframe import _accel


def make_workloads(rng):
    """(name, args) pairs sized so one call is comfortably measurable."""
    zeros8 = 0.7 * np.sqrt(rng.random(8)) * np.exp(2j * np.pi * rng.random(8))
    zeros8 = np.ascontiguousarray(zeros8)
    points = np.ascontiguousarray(
        0.9 * np.sqrt(rng.random(20000)) * np.exp(2j * np.pi * rng.random(20000))
    )
    return [
        ("blaschke_values", (zeros8, 1.0 + 0.0j, points)),
        ("tm_table", (zeros8, 2000)),
        ("product_series", (zeros8, 1.0 + 0.0j, 200000)),
        ("brownian_sum", (0.3, 0.7, 2000000)),
    ]


def best_of(fn, args, repeats):
    fn(*args)
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    impls = _accel.implementations()
    backends = [b for b in ("numpy", "numba") if b in impls]
    rng = np.random.default_rng(20250822)

    print("active backend: %s" % _accel.active_backend())
    header = ["kernel"] + ["%s (ms)" % b for b in backends]
    if len(backends) == 2:
        header.append("speedup")
    rows = []
    for name, call_args in make_workloads(rng):
        times = [best_of(impls[b][name], call_args, args.repeats) for b in backends]
        row = [name] + ["%.3f" % (t * 1e3) for t in times]
        if len(times) == 2:
            row.append("%.1fx" % (times[0] / times[1]) if times[1] > 0 else "-")
        rows.append(row)

    widths = [max(len(header[i]), *(len(r[i]) for r in rows)) for i in range(len(header))]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    print("  ".join("-" * w for w in widths))
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())


if __name__ == "__main__":
    main()
