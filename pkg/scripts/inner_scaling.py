"""Edge toggles of the inner-product algorithm on bounded-degree random pairs.

Prints toggles normalised by the input degree and by the largest degree the
working graph reaches.
"""

import argparse
import random

from graphstab.inner import inner_product_stats
from graphstab.state import ExtendedGraphState
from graphstab.suites import bounded_degree_graph


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[16, 32, 64, 128, 256, 512])
    ap.add_argument("--degree", type=int, default=4)
    ap.add_argument("--trials", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print("n     d_in  d_max  toggles    t/(n d_in^2)  t/(n d_max^2)")
    for n in args.sizes:
        for _ in range(args.trials):
            a, b = (
                ExtendedGraphState(bounded_degree_graph(rng, n, args.degree), [rng.randrange(24) for _ in range(n)])
                for _ in "ab"
            )
            _, st = inner_product_stats(a, b)
            d_in = max(a.graph.max_degree(), b.graph.max_degree(), 1)
            d = max(st.max_degree, 1)
            print(f"{n:<5d} {d_in:<5d} {d:<6d} {st.toggles:<10d} {st.toggles / (n * d_in**2):<13.2f} {st.toggles / (n * d * d):.3f}")


if __name__ == "__main__":
    main()
