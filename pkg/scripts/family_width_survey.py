#!/usr/bin/env python3
"""Tabulate exact widths of the extremal families.

Stars keep slim width 1 while their zero width grows with the degree;
windmills keep plain width 2 while their slim width grows. The oracle
is exponential, so the reachable sizes are small but the trends are
already visible.
"""
import argparse
import time

from treecuts.families import star, windmill
from treecuts.oracle import exact_width


def row(name, g, max_vertices):
    cells = [f"{name:>12} {g.num_vertices():>4} {g.num_edges():>4}"]
    for variant in ("tcw", "stcw", "tcw0"):
        t0 = time.perf_counter()
        value, _ = exact_width(g, variant, max_vertices=max_vertices)
        dt = time.perf_counter() - t0
        cells.append(f"{value:>5} ({dt:>5.1f}s)")
    print(" ".join(cells))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-star", type=int, default=6,
                    help="largest star leaf count")
    ap.add_argument("--max-windmill", type=int, default=4,
                    help="largest windmill blade count")
    ap.add_argument("--max-vertices", type=int, default=9,
                    help="oracle size cap")
    args = ap.parse_args()

    print(f"{'family':>12} {'n':>4} {'m':>4} {'tcw':>13} {'stcw':>13} {'tcw0':>13}")
    for r in range(1, args.max_star + 1):
        g = star(r)
        if g.num_vertices() > args.max_vertices:
            break
        row(f"star({r})", g, args.max_vertices)
    for r in range(1, args.max_windmill + 1):
        g = windmill(r)
        if g.num_vertices() > args.max_vertices:
            break
        row(f"windmill({r})", g, args.max_vertices)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
