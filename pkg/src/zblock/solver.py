"""Exact zero blocking / failed zero forcing / zero forcing numbers by search.

The search runs over sizes s = 1, 2, ... and, for each s, backtracks through
the vertices in a fixed order deciding white/black. A candidate is only kept
if no black vertex ends with exactly one white neighbor: any minimum blocking
set has this property, so at the first size where a blocking set exists the
restriction loses nothing, and below it there is nothing to lose. Grid mode
adds the row/column coverage and North/South/East/West conditions that every
minimum blocking set of a grid satisfies, and dedupes the dihedral symmetry.
"""
from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

from .forcing import closure, is_zero_forcing_set
from .geometry import Side, neighborhood_offsets
from .graph import Graph, grid_graph

BUDGET_ENV = "ZB_DEFAULT_BUDGET_SECS"


def _default_seconds() -> float:
    return float(os.environ.get(BUDGET_ENV, 300))


class BudgetExhausted(RuntimeError):
    pass


@dataclass
class SearchBudget:
    max_subsets: int = 10**8
    max_seconds: float = field(default_factory=_default_seconds)
    witness_cap: int = 16

    def __post_init__(self):
        if self.max_subsets <= 0 or self.max_seconds <= 0 or self.witness_cap <= 0:
            raise ValueError("budget limits must be positive")


@dataclass
class SolveResult:
    value: int | None
    witnesses: list[int]  # vertex bitmasks
    nodes: int = 0
    exhausted: bool = True  # the search space was covered, so ``value`` is proven
    closure_calls: int = 0
    capped: bool = False

    def require(self) -> int:
        if self.value is None:
            raise BudgetExhausted(f"search budget hit after {self.nodes} nodes")
        return self.value

    def to_json(self, g: Graph) -> dict:
        def conv(mask):
            pts = g.points_of(mask)
            return [list(p) for p in pts] if g.grid is not None else [v + 1 for v in pts]
        return {"value": self.value, "witnesses": [conv(w) for w in self.witnesses],
                "exhausted": self.exhausted, "nodes": self.nodes}


class Enumeration(NamedTuple):
    sets: list[int]
    capped: bool


class _Found(Exception):
    pass


class _OutOfBudget(Exception):
    pass


@dataclass
class _GridPlan:
    """Column-major frame over the longer side plus the grid-only filters."""

    col_masks: list[int]  # frame column c (1-based) -> vertex mask; index 0 unused
    col_end: list[int]  # search position -> frame column it completes, or 0
    row_masks: list[int]
    lemma2: list[tuple[int, ...]]  # per vertex: masks its white status requires to meet
    perms: list[list[int]]


def _grid_plan(g: Graph) -> tuple[list[int], _GridPlan]:
    m, n = g.grid.m, g.grid.n
    if n >= m:
        frame = [(x, y) for x in range(1, n + 1) for y in range(1, m + 1)]
        ncols, colkey, rowkey, nrows = n, (lambda p: p[0]), (lambda p: p[1]), m
    else:
        frame = [(x, y) for y in range(1, m + 1) for x in range(1, n + 1)]
        ncols, colkey, rowkey, nrows = m, (lambda p: p[1]), (lambda p: p[0]), n
    order = [g.vertex_at(p) for p in frame]
    col_masks = [0] * (ncols + 1)
    row_masks = [0] * (nrows + 1)
    col_end = [0] * len(order)
    for i, p in enumerate(frame):
        col_masks[colkey(p)] |= 1 << order[i]
        row_masks[rowkey(p)] |= 1 << order[i]
        if i + 1 == len(frame) or colkey(frame[i + 1]) != colkey(p):
            col_end[i] = colkey(p)
    lemma2 = []
    for v in range(g.vertex_count):
        x, y = g.coords(v)
        reqs = []
        for side, applies in ((Side.NORTH, y < m), (Side.SOUTH, y > 1),
                              (Side.EAST, x < n), (Side.WEST, x > 1)):
            if applies:
                mask = 0
                for ox, oy in neighborhood_offsets(side):
                    if g.grid.contains(x + ox, y + oy):
                        mask |= 1 << g.vertex_at((x + ox, y + oy))
                reqs.append(mask)
        lemma2.append(tuple(reqs))
    return order, _GridPlan(col_masks, col_end, row_masks, lemma2, grid_symmetries(g))


def grid_symmetries(g: Graph) -> list[list[int]]:
    """Vertex permutations of the grid's dihedral symmetry group (4 or 8 elements)."""
    m, n = g.grid.m, g.grid.n
    maps = [lambda x, y: (x, y), lambda x, y: (n + 1 - x, y),
            lambda x, y: (x, m + 1 - y), lambda x, y: (n + 1 - x, m + 1 - y)]
    if m == n:
        maps += [lambda x, y: (y, x), lambda x, y: (n + 1 - y, x),
                 lambda x, y: (y, n + 1 - x), lambda x, y: (n + 1 - y, n + 1 - x)]
    return [[g.vertex_at(f(*g.coords(v))) for v in range(g.vertex_count)] for f in maps]


def _apply_perm(perm: list[int], mask: int) -> int:
    out = 0
    v = 0
    while mask:
        if mask & 1:
            out |= 1 << perm[v]
        mask >>= 1
        v += 1
    return out


def orbit(perms: list[list[int]], mask: int) -> set[int]:
    return {_apply_perm(p, mask) for p in perms}


class _Search:
    def __init__(self, g: Graph, order: list[int], plan: _GridPlan | None,
                 max_nodes: int, deadline: float):
        self.g = g
        self.order = order
        self.plan = plan
        self.adj = g.adj_masks
        pos = {v: i for i, v in enumerate(order)}
        self.closes_at: list[list[int]] = [[] for _ in order]
        for v in range(g.vertex_count):
            last = max([pos[v]] + [pos[u] for u in g.neighbors[v]])
            self.closes_at[last].append(v)
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.nodes = 0
        self.closure_calls = 0

    def _accept(self, white: int, canonical_only: bool) -> bool:
        plan = self.plan
        if plan is not None:
            rows = plan.row_masks
            if not white & rows[1] or not white & rows[-1]:
                return False
            if any(not white & (rows[j] | rows[j + 1]) for j in range(1, len(rows) - 1)):
                return False
            w = white
            v = 0
            while w:
                if w & 1 and any(not white & req for req in plan.lemma2[v]):
                    return False
                w >>= 1
                v += 1
            if canonical_only and any(_apply_perm(p, white) < white for p in plan.perms[1:]):
                return False
        self.closure_calls += 1
        final, _ = closure(self.g, self.g.full_mask & ~white)
        return not final.all_black

    def run(self, target: int, lead: int, first_only: bool, cap: int,
            canonical_only: bool) -> list[int]:
        order, adj, closes_at, plan = self.order, self.adj, self.closes_at, self.plan
        total = len(order)
        found: list[int] = []
        col_masks = plan.col_masks if plan else None
        col_end = plan.col_end if plan else None
        ncols = len(col_masks) - 1 if plan else 0

        def rec(i, white, count):
            self.nodes += 1
            if self.nodes > self.max_nodes:
                raise _OutOfBudget
            if self.nodes & 0xFFF == 0 and time.monotonic() > self.deadline:
                raise _OutOfBudget
            if count + (total - i) < target:
                return
            if i == total:
                if count == target and self._accept(white, canonical_only):
                    found.append(white)
                    if first_only or len(found) >= cap:
                        raise _Found
                return
            bit = 1 << order[i]
            if i < lead:
                options = (0,)
            elif i == lead:
                options = (1,)
            elif count < target:
                options = (1, 0)
            else:
                options = (0,)
            for choose in options:
                w2 = white | bit if choose else white
                c2 = count + choose
                ok = True
                for u in closes_at[i]:
                    if not w2 >> u & 1:
                        x = adj[u] & w2
                        if x and not x & (x - 1):
                            ok = False
                            break
                if ok and plan is not None and col_end[i]:
                    c = col_end[i]
                    has = w2 & col_masks[c]
                    if not has and (c == 1 or c == ncols or not w2 & col_masks[c - 1]):
                        ok = False
                    elif c < ncols:
                        rest = ncols - c
                        need = (rest + 1) // 2 if has else 1 + rest // 2
                        ok = c2 + need <= target
                if ok:
                    rec(i + 1, w2, c2)

        try:
            rec(0, 0, 0)
        except _Found:
            pass
        return found


def _task(args):
    g, order, plan, target, lead, first_only, cap, canonical_only, max_nodes, deadline = args
    s = _Search(g, order, plan, max_nodes, deadline)
    try:
        found = s.run(target, lead, first_only, cap, canonical_only)
        return found, s.nodes, s.closure_calls, True
    except _OutOfBudget:
        return [], s.nodes, s.closure_calls, False


def _layer(g, order, plan, target, first_only, cap, canonical_only, budget, deadline,
           workers, used_nodes):
    """All leads for one size; returns (sets, nodes, closure calls, complete)."""
    leads = range(len(order))
    remaining = max(1, budget.max_subsets - used_nodes)
    sets: list[int] = []
    nodes = calls = 0
    if workers <= 1:
        search = _Search(g, order, plan, remaining, deadline)
        try:
            for lead in leads:
                sets += search.run(target, lead, first_only, cap - len(sets), canonical_only)
                if sets and (first_only or len(sets) >= cap):
                    break
        except _OutOfBudget:
            return sets, search.nodes, search.closure_calls, False
        return sets, search.nodes, search.closure_calls, True
    args = [(g, order, plan, target, lead, first_only, cap, canonical_only, remaining, deadline)
            for lead in leads]
    complete = True
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_task, a) for a in args]
        for fut in futures:
            found, k, c, done = fut.result()
            nodes += k
            calls += c
            if not done:
                complete = False
                break
            sets += found[: cap - len(sets)]
            if sets and (first_only or len(sets) >= cap):
                break
        for fut in futures:
            fut.cancel()
    return sets, nodes, calls, complete


def _ascending(g, order, plan, budget, workers, canonical_only, enumerate_cap=None):
    deadline = time.monotonic() + budget.max_seconds
    nodes = calls = 0
    for s in range(1, g.vertex_count + 1):
        first_only = enumerate_cap is None
        cap = budget.witness_cap if first_only else enumerate_cap
        sets, k, c, complete = _layer(g, order, plan, s, first_only, cap, canonical_only,
                                      budget, deadline, workers, nodes)
        nodes += k
        calls += c
        if not complete:
            return SolveResult(None, [], nodes, False, calls)
        if sets:
            return SolveResult(s, sets, nodes, True, calls)
    return SolveResult(None, [], nodes, True, calls)


def min_blocking_number(g: Graph, budget: SearchBudget | None = None, workers: int = 1) -> SolveResult:
    """Exact B(g) with one verified witness. ``value`` is None if the budget ran out."""
    budget = budget or SearchBudget()
    if g.vertex_count == 0:
        return SolveResult(None, [], 0, True, 0)
    return _ascending(g, list(range(g.vertex_count)), None, budget, workers, False)


def min_blocking_grid(m: int, n: int, budget: SearchBudget | None = None, workers: int = 1,
                      enumerate_cap: int | None = None) -> SolveResult:
    """Exact B(G_{m,n}) using the grid-only pruning and symmetry reduction.

    With ``enumerate_cap`` the witnesses are all minimum sets (up to the cap),
    obtained by expanding the symmetry orbits of canonical representatives.
    """
    budget = budget or SearchBudget()
    if min(m, n) < 2:
        raise ValueError("grid mode needs both sides >= 2; use min_blocking_number")
    g = grid_graph(m, n)
    order, plan = _grid_plan(g)
    if enumerate_cap is None:
        return _ascending(g, order, plan, budget, workers, True)
    res = _ascending(g, order, plan, budget, workers, True, enumerate_cap=10**9)
    if res.value is not None:
        everything = sorted(set().union(*(orbit(plan.perms, w) for w in res.witnesses)))
        res.capped = len(everything) > enumerate_cap
        res.witnesses = everything[:enumerate_cap]
    return res


def enumerate_min_blocking_sets(g: Graph, size: int, cap: int = 500,
                                budget: SearchBudget | None = None) -> Enumeration:
    """All blocking sets with exactly ``size`` vertices, where ``size`` is B(g).

    Only stall filtering is used (no grid lemmas), so the output can be used
    to test those lemmas.
    """
    budget = budget or SearchBudget()
    deadline = time.monotonic() + budget.max_seconds
    search = _Search(g, list(range(g.vertex_count)), None, budget.max_subsets, deadline)
    sets: list[int] = []
    try:
        for lead in range(g.vertex_count):
            sets += search.run(size, lead, False, cap + 1 - len(sets), False)
            if len(sets) > cap:
                break
    except _OutOfBudget:
        raise BudgetExhausted("enumeration ran out of budget") from None
    return Enumeration(sets[:cap], len(sets) > cap)


def failed_zero_forcing_number(g: Graph, budget: SearchBudget | None = None, workers: int = 1) -> int:
    return g.vertex_count - min_blocking_number(g, budget, workers).require()


def zero_forcing_number(g: Graph, budget: SearchBudget | None = None) -> int:
    budget = budget or SearchBudget()
    deadline = time.monotonic() + budget.max_seconds
    tried = 0
    for s in range(g.vertex_count + 1):
        for combo in itertools.combinations(range(g.vertex_count), s):
            tried += 1
            if tried > budget.max_subsets or (tried & 0xFF == 0 and time.monotonic() > deadline):
                raise BudgetExhausted(f"zero forcing search stopped after {tried} subsets")
            mask = 0
            for v in combo:
                mask |= 1 << v
            if is_zero_forcing_set(g, mask):
                return s
    raise AssertionError("the full vertex set always forces")


def exhaustive_blocking_number(g: Graph) -> tuple[int, list[int]]:
    """Reference oracle: plain subset enumeration with closure, no pruning of any kind."""
    full = g.full_mask
    for s in range(1, g.vertex_count + 1):
        hits = []
        for combo in itertools.combinations(range(g.vertex_count), s):
            white = 0
            for v in combo:
                white |= 1 << v
            final, _ = closure(g, full & ~white)
            if not final.all_black:
                hits.append(white)
        if hits:
            return s, hits
    raise ValueError("graph has no vertices")
