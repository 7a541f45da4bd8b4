"""Print the closed-form table next to exhaustive search for small grids.

Usage: python3 scripts/formula_table.py [--max-n 12] [--search-limit 28]
"""
import argparse

from zblock.solver import min_blocking_grid
from zblock.theory import blocking_number_formula, qr_params, upper_bound_bcc


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--search-limit", type=int, default=28)
    args = ap.parse_args()
    print("m\tn\tq\tr\tbranch\tB\tbound\tsearch")
    for m in range(2, args.max_n + 1):
        for n in range(m, args.max_n + 1):
            p = qr_params(m, n)
            search = min_blocking_grid(m, n).value if m * n <= args.search_limit else "-"
            print(f"{m}\t{n}\t{p.q}\t{p.r}\t{p.branch}\t{blocking_number_formula(m, n)}"
                  f"\t{upper_bound_bcc(m, n)}\t{search}")


if __name__ == "__main__":
    main()
