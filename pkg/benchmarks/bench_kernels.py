"""Compare the compiled and pure-Python kernels on the workloads that dominate.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""

import argparse
import time

from pnsat import _kernels_py
from pnsat.construction import build_gn

try:
    from pnsat import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def workloads(quick):
    g12 = build_gn(12).graph.adj
    g14 = build_gn(14).graph.adj
    g10 = build_gn(10).graph.adj
    yield "free check: no induced P_14 in G_14", lambda k: k.find_induced_path(g14, 14)
    yield "full saturation check of G_12", lambda k: k.is_path_saturated(g12, 12)
    yield "longest induced path of G_10", lambda k: k.longest_induced_path(g10)
    yield "all labeled graphs, order 6, target P_4", lambda k: k.exhaust_path_target(6, 4, 0, 1 << 15)
    if not quick:
        yield "all labeled graphs, order 7, target P_4", lambda k: k.exhaust_path_target(7, 4, 0, 1 << 21)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the order-7 sweep")
    args = ap.parse_args()
    if _kernels_c is None:
        print("compiled kernels not built; only the pure-Python timings are shown")
    print(f"{'workload':<44}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for name, work in workloads(args.quick):
        tp = best_of(lambda: work(_kernels_py), 1 if "order 7" in name else args.repeat)
        if _kernels_c is None:
            print(f"{name:<44}{tp:>11.4f}{'-':>11}{'-':>9}")
            continue
        tc = best_of(lambda: work(_kernels_c), args.repeat)
        print(f"{name:<44}{tp:>11.4f}{tc:>11.4f}{tp / tc:>8.0f}x")


if __name__ == "__main__":
    main()
