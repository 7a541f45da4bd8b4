"""Exhaustive single-vertex mutation study of the certificate checks.

For every grid with m*n <= LIMIT and every enumerated minimum blocking set,
apply every possible single removal and single addition, and report how
often the certificate rejects the mutant. For additions it also reports how
often the mutant is still stalled, i.e. is itself a (larger) fort.

Usage: python3 scripts/mutation_analysis.py [--limit 20]
"""
import argparse

from zblock.acceptance import _min_sets, small_grids
from zblock.forcing import is_stalled
from zblock.graph import grid_graph
from zblock.staircase import certify


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--limit", type=int, default=20)
    args = ap.parse_args()
    print("grid\tsets\tremove_caught\tadd_caught\tadd_still_stalled\tadd_missed_and_not_stalled")
    for m, n in small_grids(args.limit):
        g = grid_graph(m, n)
        sets = _min_sets(m, n, 500)
        cells = [(x, y) for x in range(1, n + 1) for y in range(1, m + 1)]
        rem = [not certify(m, n, s - {p}).passed for s in sets for p in s]
        adds = [(s | {p}) for s in sets for p in cells if p not in s]
        caught = [not certify(m, n, a).passed for a in adds]
        stalled = [is_stalled(g, g.full_mask & ~g.mask_of(a)) for a in adds]
        odd = sum(1 for c, st in zip(caught, stalled) if not c and not st)
        print(f"{m}x{n}\t{len(sets)}\t{sum(rem) / len(rem):.3f}\t{sum(caught) / len(caught):.3f}"
              f"\t{sum(stalled) / len(stalled):.3f}\t{odd}")


if __name__ == "__main__":
    main()
