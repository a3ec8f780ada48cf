"""Replay a large (Z,.)-row CZ workload and report time and toggle counts."""

import argparse
import random
import time

from graphstab.gates import apply_cz
from graphstab.suites import cz_toggle_profile, z_row_workload


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--qubits", type=int, default=10_000)
    ap.add_argument("--gates", type=int, default=100_000)
    ap.add_argument("--degree", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    t = time.perf_counter()
    start, ops = z_row_workload(random.Random(args.seed), args.qubits, args.gates, args.degree)
    print(f"generated {len(ops)} gates in {time.perf_counter() - t:.1f}s")
    s = start.copy()
    t = time.perf_counter()
    for x, y in ops:
        apply_cz(s, x, y, inplace=True)
    print(f"replay {time.perf_counter() - t:.2f}s, final max degree {s.graph.max_degree()}")
    prof = cz_toggle_profile(start.copy(), ops)
    over = sum(1 for _, d, k in prof if k > d + 1)
    print(f"toggles total {sum(k for *_, k in prof)}, gates over d+1: {over}")


if __name__ == "__main__":
    main()
