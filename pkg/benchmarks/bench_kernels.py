"""Time the numba kernels against the pure numpy fallback.

Runs every kernel on the same arrays and prints a side-by-side table.
The jitted functions are compiled once before timing so the numbers
reflect steady-state cost. Usage:

    python benchmarks/bench_kernels.py [--degree 6] [--repeats 3]
"""

import argparse
import time

import numpy as np

from quasik import _kernels_numpy as knp
from quasik.groups import FiniteGroup, GSet

try:
    from quasik import _kernels_numba as knb
except ImportError:
    knb = None


def symmetric_group(degree):
    swap = [1, 0] + list(range(2, degree))
    cycle = list(range(1, degree)) + [0]
    return FiniteGroup.from_generators(degree, [swap, cycle])


def commuting_pairs(G, limit=200_000):
    eq = G.mult == G.mult.T
    xs, ys = np.where(eq)
    cand = np.stack([xs, ys], axis=1).astype(np.int32)
    return cand[:limit]


def bench(fn, args, repeats):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--degree", type=int, default=6,
                    help="benchmark on the full symmetric group S_degree")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    if knb is None:
        raise SystemExit("numba backend not importable; nothing to compare")

    G = symmetric_group(args.degree)
    print("group: S%d, order %d" % (args.degree, G.size))

    reps = np.asarray([int(c[0]) for c in G.conjugacy_classes],
                      dtype=np.int32)
    cosets = GSet.cosets(G, G.centralizer([1]))
    cases = [
        ("mult_table", (G.elements,)),
        ("find_rows", (G.elements, G.elements[::-1])),
        ("minimal_tuple_mask", (G.conj, commuting_pairs(G))),
        ("class_coeffs", (G.mult, G.inv, G.class_of, reps)),
        ("point_orbits", (cosets.action,)),
    ]

    # compile outside the timed region
    for name, a in cases:
        getattr(knb, name)(*a)

    print("%-20s %12s %12s %8s" % ("kernel", "numpy", "numba", "speedup"))
    for name, a in cases:
        t_np, out_np = bench(getattr(knp, name), a, args.repeats)
        t_nb, out_nb = bench(getattr(knb, name), a, args.repeats)
        if not np.array_equal(np.asarray(out_np), np.asarray(out_nb)):
            raise SystemExit("%s: backends disagree" % name)
        print("%-20s %10.1fms %10.1fms %7.1fx"
              % (name, t_np * 1e3, t_nb * 1e3, t_np / t_nb))


if __name__ == "__main__":
    main()
