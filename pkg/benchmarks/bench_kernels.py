"""Compare the numba and pure-numpy lattice kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 5]

Each workload is run through both backends directly (bypassing the env-flag
dispatch), results are checked for equality, and the best wall time of
``--repeat`` runs is reported.  The numba functions are compiled before timing.
"""

from __future__ import annotations

import argparse
import time
from fractions import Fraction

import numpy as np

from multctl import kernels
from multctl.monomial import MonomialIdeal, max_ideal_power
from multctl.newton import newton_polyhedron

WORKLOADS = [
    ("m^4 in 4 vars, c = 6", max_ideal_power(4, 4), Fraction(6)),
    ("(x^7, y^5 z, x y^2 z^4) c = 5/2", MonomialIdeal.of(3, [(7, 0, 0), (0, 5, 1), (1, 2, 4)]), Fraction(5, 2)),
    ("(x^6 y, x^2 y^5, y^9) c = 3", MonomialIdeal.of(2, [(6, 1, ), (2, 5), (0, 9)]), Fraction(3)),
    ("m^3 in 3 vars, c = 7", max_ideal_power(3, 3), Fraction(7)),
]


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if not kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    rows = []
    for label, ideal, c in WORKLOADS:
        P = newton_polyhedron(ideal)
        fnum, fden = P.facet_arrays()
        bounds = P.box_bounds(c)
        cn, cd = c.numerator, c.denominator
        # warm up the JIT and check agreement
        gn = kernels.mu_grid_numba(bounds, fnum, fden)
        gp = kernels.mu_grid_numpy(bounds, fnum, fden)
        assert np.array_equal(gn[0] * gp[1], gp[0] * gn[1])
        fa = kernels.frontier_numba(bounds, fnum, fden, np.int64(cn), np.int64(cd))
        fb = kernels.frontier_numpy(bounds, fnum, fden, cn, cd)
        assert {tuple(r) for r in fa.tolist()} == {tuple(r) for r in fb.tolist()}
        pts = np.unique(np.vstack([fa, fa + 1]), axis=0)
        kernels.antichain_mask_numba(pts)

        grid_points = int(np.prod(bounds + 1))
        for kernel, f_numba, f_numpy in [
            ("mu_grid", lambda: kernels.mu_grid_numba(bounds, fnum, fden),
             lambda: kernels.mu_grid_numpy(bounds, fnum, fden)),
            ("frontier", lambda: kernels.frontier_numba(bounds, fnum, fden, np.int64(cn), np.int64(cd)),
             lambda: kernels.frontier_numpy(bounds, fnum, fden, cn, cd)),
            ("antichain", lambda: kernels.antichain_mask_numba(pts), lambda: kernels.antichain_mask_numpy(pts)),
        ]:
            tn, tp = best_of(f_numba, args.repeat), best_of(f_numpy, args.repeat)
            rows.append((label, kernel, grid_points, tn * 1e3, tp * 1e3, tp / tn if tn else float("inf")))

    header = f"{'workload':34} {'kernel':10} {'box pts':>9} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, kernel, n, tn, tp, s in rows:
        print(f"{label:34} {kernel:10} {n:9d} {tn:10.3f} {tp:10.3f} {s:7.1f}x")


if __name__ == "__main__":
    main()
