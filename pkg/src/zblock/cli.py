"""Command-line interface: ``zblock <subcommand> ...``.

Exit codes: 0 success, 1 invalid input, 2 verification or certification
failure, 3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import random
import re
import sys

from . import forcing, render, solver, staircase, theory
from .graph import GraphFormatError, grid_graph, parse_graph

EXIT_OK, EXIT_INPUT, EXIT_CHECK, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def parse_grid(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*[xX]\s*(\d+)\s*", text)
    if not m:
        raise InputError(f"grid must look like MxN, got {text!r}")
    rows, cols = int(m.group(1)), int(m.group(2))
    if rows < 1 or cols < 1:
        raise InputError("grid dimensions must be positive")
    return rows, cols


def parse_points(text: str) -> list[tuple[int, int]]:
    pts = re.findall(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", text)
    leftover = re.sub(r"\(\s*-?\d+\s*,\s*-?\d+\s*\)", "", text).replace(",", "").strip()
    if leftover:
        raise InputError(f"cannot parse point list {text!r}")
    return [(int(x), int(y)) for x, y in pts]


def parse_range(text: str) -> range:
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if not m:
        raise InputError(f"range must look like A..B, got {text!r}")
    return range(int(m.group(1)), int(m.group(2)) + 1)


def load_white(args, m: int, n: int) -> list[tuple[int, int]]:
    if args.white is not None:
        pts = parse_points(args.white)
    elif args.set is not None:
        try:
            if args.set == "-":
                doc = json.load(sys.stdin)
            else:
                with open(args.set) as fh:
                    doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read {args.set}: {exc}") from None
        raw = doc["white"] if isinstance(doc, dict) else doc
        if isinstance(doc, dict) and (doc.get("m"), doc.get("n")) not in ((m, n), (None, None)):
            raise InputError(f"set file is for a {doc.get('m')}x{doc.get('n')} grid")
        try:
            pts = [(int(p[0]), int(p[1])) for p in raw]
        except (TypeError, ValueError, IndexError):
            raise InputError("white list must hold [x, y] pairs") from None
    else:
        raise InputError("give the vertex set with --set FILE or --white")
    for x, y in pts:
        if not (1 <= x <= n and 1 <= y <= m):
            raise InputError(f"point ({x},{y}) is outside the {m}x{n} grid")
    if len(set(pts)) != len(pts):
        raise InputError("duplicate points in the vertex set")
    return pts


def _budget(args) -> solver.SearchBudget:
    kw = {}
    if getattr(args, "budget_secs", None) is not None:
        kw["max_seconds"] = args.budget_secs
    if getattr(args, "budget_subsets", None) is not None:
        kw["max_subsets"] = args.budget_subsets
    if getattr(args, "witness_cap", None) is not None:
        kw["witness_cap"] = args.witness_cap
    try:
        return solver.SearchBudget(**kw)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _formula_or_none(m, n):
    try:
        return theory.blocking_number_formula(m, n)
    except theory.UnsupportedGrid:
        return None


def cmd_formula(args, out):
    m, n = parse_grid(args.grid)
    try:
        p = theory.qr_params(m, n)
    except theory.UnsupportedGrid as exc:
        raise InputError(str(exc)) from None
    value = theory.blocking_number_formula(m, n)
    bound = theory.upper_bound_bcc(m, n)
    if args.json:
        out.write(json.dumps({"m": m, "n": n, "q": p.q, "r": p.r, "branch": p.branch,
                              "B": value, "bound": bound}) + "\n")
    else:
        out.write(f"q={p.q} r={p.r} branch={p.branch} B={value} bound={bound}\n")
    return EXIT_OK


def cmd_solve(args, out):
    budget = _budget(args)
    if (args.grid is None) == (args.graph is None):
        raise InputError("give exactly one of --grid or --graph")
    if args.grid is not None:
        m, n = parse_grid(args.grid)
        if min(m, n) >= 2:
            g = grid_graph(m, n)
            res = solver.min_blocking_grid(m, n, budget, args.workers, args.enumerate)
        else:
            g = grid_graph(m, n)
            res = _generic(g, budget, args)
    else:
        try:
            with open(args.graph) as fh:
                g = parse_graph(fh.read())
        except (OSError, GraphFormatError, ValueError) as exc:
            raise InputError(str(exc)) from None
        res = _generic(g, budget, args)
    if res.value is None:
        if args.json:
            out.write(json.dumps(res.to_json(g)) + "\n")
        else:
            out.write(f"budget exhausted after {res.nodes} nodes\n")
        return EXIT_BUDGET
    if args.json:
        doc = res.to_json(g)
        if args.enumerate is not None:
            doc["capped"] = res.capped
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"B={res.value} F={g.vertex_count - res.value} witnesses={len(res.witnesses)} "
                  f"nodes={res.nodes}\n")
        for w in res.witnesses:
            pts = g.points_of(w)
            if g.grid is not None:
                out.write(",".join(f"({x},{y})" for x, y in pts) + "\n")
            else:
                out.write(" ".join(str(v + 1) for v in pts) + "\n")
    return EXIT_OK


def _generic(g, budget, args):
    res = solver.min_blocking_number(g, budget, args.workers)
    if args.enumerate is not None and res.value is not None:
        try:
            enum = solver.enumerate_min_blocking_sets(g, res.value, args.enumerate, budget)
        except solver.BudgetExhausted:
            return solver.SolveResult(None, [], res.nodes, False)
        res.witnesses = enum.sets
        res.capped = enum.capped
    return res


def cmd_witness(args, out):
    m, n = parse_grid(args.grid)
    try:
        w = theory.build_witness(m, n)
    except theory.UnsupportedGrid as exc:
        raise InputError(str(exc)) from None
    text = json.dumps(w.to_json()) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_verify(args, out):
    m, n = parse_grid(args.grid)
    white = load_white(args, m, n)
    g = grid_graph(m, n)
    final, trace = forcing.closure(g, g.full_mask & ~g.mask_of(white))
    blocking = not final.all_black
    stalled = not trace
    formula = _formula_or_none(m, n)
    if args.json:
        out.write(json.dumps({"blocking": blocking, "stalled": stalled, "size": len(white),
                              "formula": formula}) + "\n")
    else:
        f = "n/a" if formula is None else formula
        out.write(f"blocking={str(blocking).lower()} stalled={str(stalled).lower()} "
                  f"size={len(white)} formula={f}\n")
    return EXIT_OK if blocking else EXIT_CHECK


def cmd_certify(args, out):
    m, n = parse_grid(args.grid)
    white = load_white(args, m, n)
    sides = staircase.SIDES if args.side == "all" else (args.side.upper(),)
    report = staircase.certify(m, n, white, sides)
    if args.json:
        out.write(json.dumps(report.to_json()) + "\n")
    else:
        out.write("\n".join(report.lines()) + "\n")
        out.write(f"certificate {'pass' if report.passed else 'FAIL'}\n")
    return EXIT_OK if report.passed else EXIT_CHECK


def cmd_trace(args, out):
    m, n = parse_grid(args.grid)
    white = load_white(args, m, n)
    g = grid_graph(m, n)
    rng = random.Random(args.order) if args.order is not None else None
    _, trace = forcing.closure(g, g.full_mask & ~g.mask_of(white), rng)
    out.write(json.dumps(forcing.trace_to_json(g, trace)) + "\n")
    return EXIT_OK


def cmd_table(args, out):
    ms, ns = parse_range(args.m_range), parse_range(args.n_range)
    budget = _budget(args)
    header = ["m", "n", "q", "r", "B", "bound"]
    if args.check_solver is not None:
        header.append("solver")
    rows = []
    disagreements = 0
    for m in ms:
        for n in ns:
            if m < 2 or n < m:
                continue
            p = theory.qr_params(m, n)
            value = theory.blocking_number_formula(m, n)
            row = [m, n, p.q, p.r, value, theory.upper_bound_bcc(m, n)]
            if args.check_solver is not None:
                if m * n <= args.check_solver:
                    res = solver.min_blocking_grid(m, n, budget, args.workers)
                    if res.value is None:
                        row.append("budget")
                    else:
                        row.append(res.value)
                        disagreements += res.value != value
                else:
                    row.append("-")
            rows.append(row)
    if args.json:
        out.write(json.dumps([dict(zip(header, row)) for row in rows]) + "\n")
    else:
        out.write("\t".join(header) + "\n")
        for row in rows:
            out.write("\t".join(str(v) for v in row) + "\n")
    return EXIT_CHECK if disagreements else EXIT_OK


def cmd_render(args, out):
    m, n = parse_grid(args.grid)
    white = load_white(args, m, n)
    text = render.ascii_grid(m, n, white)
    if args.json:
        out.write(json.dumps({"m": m, "n": n, "rows": text.splitlines()}) + "\n")
    else:
        out.write(text)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render.svg_grid(m, n, white, overlay=args.certify_overlay))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="zblock", description="Zero forcing and zero blocking on graphs and grids.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add_set(sp):
        sp.add_argument("--grid", required=True, help="grid size MxN (rows x columns)")
        grp = sp.add_mutually_exclusive_group()
        grp.add_argument("--set", help="witness JSON file with a 'white' list ('-' reads stdin)")
        grp.add_argument("--white", help='inline points, e.g. "(1,1),(2,2)"')

    def add_budget(sp):
        sp.add_argument("--budget-secs", type=float)
        sp.add_argument("--budget-subsets", type=int)
        sp.add_argument("--workers", type=int, default=1)

    sp = sub.add_parser("formula", help="closed-form B(G_{m,n}) and the known upper bound")
    sp.add_argument("--grid", required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_formula)

    sp = sub.add_parser("solve", help="exact zero blocking number by search")
    sp.add_argument("--grid")
    sp.add_argument("--graph", help="edge-list file")
    sp.add_argument("--enumerate", type=int, metavar="CAP")
    sp.add_argument("--witness-cap", type=int)
    sp.add_argument("--json", action="store_true")
    add_budget(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("witness", help="verified minimum zero blocking set of a grid")
    sp.add_argument("--grid", required=True)
    sp.add_argument("-o", "--output")
    sp.add_argument("--json", action="store_true", help="accepted for uniformity; output is JSON")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("verify", help="is the white set blocking, and does it stall at once?")
    add_set(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("certify", help="staircase certificate report")
    add_set(sp)
    sp.add_argument("--side", default="all", choices=["xy", "zw", "xz", "yw", "all"])
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("trace", help="force-by-force closure trace as JSON")
    add_set(sp)
    sp.add_argument("--order", type=int, metavar="SEED", help="random force order with this seed")
    sp.add_argument("--json", action="store_true", help="accepted for uniformity; output is JSON")
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("table", help="TSV of formula values, optionally checked by search")
    sp.add_argument("--m-range", required=True)
    sp.add_argument("--n-range", required=True)
    sp.add_argument("--check-solver", type=int, metavar="LIMIT",
                    help="also solve grids with m*n <= LIMIT")
    sp.add_argument("--json", action="store_true")
    add_budget(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("render", help="ASCII picture of a white set")
    add_set(sp)
    sp.add_argument("--svg", help="also write an SVG snapshot")
    sp.add_argument("--certify-overlay", action="store_true", help="draw staircases in the SVG")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_render)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except solver.BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
