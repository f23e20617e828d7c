#!/usr/bin/env python3
"""Exercise the slim-width approximation pipeline on random graphs.

Each trial draws a connected graph, sweeps omega upward until the
pipeline accepts, and compares the certified slim width against the
exact value when the graph is small enough for the oracle. The
certified bound 6(omega+1)^3 is loose by design; the interesting
columns are the acceptance threshold and the actual slim width of the
emitted decomposition.
"""
import argparse
import random

from treecuts.approx import approximate_stcw
from treecuts.decomposition import width_report
from treecuts.multigraph import MultiGraph
from treecuts.oracle import SizeLimitError, exact_width


def random_connected(rng: random.Random, n: int, extra: int) -> MultiGraph:
    g = MultiGraph(range(n))
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        g.add_edge(order[i], rng.choice(order[:i]))
    for _ in range(extra):
        u, v = rng.sample(range(n), 2)
        g.add_edge(u, v)
    return g


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=10)
    ap.add_argument("--n", type=int, default=7, help="vertices per trial")
    ap.add_argument("--extra", type=int, default=4,
                    help="edges beyond the spanning tree")
    ap.add_argument("--max-omega", type=int, default=6)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'trial':>5} {'m':>4} {'accepted at':>11} {'slim of output':>14} "
          f"{'bound':>6} {'exact slim':>10}")
    for trial in range(args.trials):
        g = random_connected(rng, args.n, args.extra)
        accepted = None
        for omega in range(1, args.max_omega + 1):
            r = approximate_stcw(g, omega)
            if r.accepted:
                accepted = r
                break
        try:
            exact = str(exact_width(g, "stcw", max_vertices=9)[0])
        except SizeLimitError:
            exact = "-"
        if accepted is None:
            print(f"{trial:>5} {g.num_edges():>4} {'> ' + str(args.max_omega):>11} "
                  f"{'-':>14} {'-':>6} {exact:>10}")
            continue
        slim = width_report(accepted.decomposition, g).slim_width
        print(f"{trial:>5} {g.num_edges():>4} {accepted.omega:>11} {slim:>14} "
              f"{accepted.slim_bound:>6} {exact:>10}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
