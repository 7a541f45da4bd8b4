"""Run every acceptance criterion and print one PASS/FAIL line each.

Usage: python3 scripts/run_acceptance.py [--only C1,C5b] [--verbose]
"""
import argparse
import sys

from zblock.acceptance import ALL_CRITERIA


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--only", help="comma-separated keys such as C1,C5b")
    ap.add_argument("--verbose", action="store_true", help="print per-grid mutation rates")
    args = ap.parse_args()
    wanted = set(args.only.split(",")) if args.only else None
    failed = 0
    for fn in ALL_CRITERIA:
        key = fn.__name__.split("_")[1].upper()
        if wanted and f"C{key}" not in wanted:
            continue
        out = fn()
        print(out.line(), flush=True)
        failed += not out.passed
        if args.verbose and "rates" in out.data:
            for (m, n), (rate, tally) in out.data["rates"].items():
                add, rem = tally["add"], tally["remove"]
                print(f"    {m}x{n}: {rate:.3f}  add {add[0]}/{add[1]}  remove {rem[0]}/{rem[1]}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
