"""Acceptance criteria as plain functions, shared by the test suite and scripts/.

Each ``criterion_*`` returns an :class:`Outcome`; nothing here asserts, so a
failing criterion reports its numbers instead of stopping at the first miss.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .forcing import closure
from .graph import Graph, grid_graph
from .solver import (SearchBudget, enumerate_min_blocking_sets, exhaustive_blocking_number,
                     min_blocking_grid)
from .staircase import certify
from .theory import (_ceil_div, blocking_number_formula, build_witness, gap_decompositions,
                     qr_params, upper_bound_bcc, verify_white_set)

KNOWN_SMALL_VALUES = {(2, 2): 2, (2, 3): 3, (3, 3): 3, (2, 4): 4, (3, 4): 5, (2, 5): 4}


@dataclass
class Outcome:
    key: str
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0
    data: dict = field(default_factory=dict)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.key} {self.title}: {self.detail} ({self.seconds:.1f}s)"


def small_grids(limit: int) -> list[tuple[int, int]]:
    """All (m, n) with 2 <= m <= n and m*n <= limit."""
    return [(m, n) for m in range(2, limit + 1) for n in range(m, limit + 1) if m * n <= limit]


def criterion_1_formula_vs_search(limit: int = 28, workers: int = 1) -> Outcome:
    t0 = time.perf_counter()
    grids = small_grids(limit)
    bad = []
    for m, n in grids:
        res = min_blocking_grid(m, n, SearchBudget(), workers)
        if not res.exhausted or res.value != blocking_number_formula(m, n):
            bad.append((m, n, res.value))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 600
    return Outcome("C1", "formula vs exhaustive search", ok,
                   f"{len(grids)} grids with m*n<={limit}, {len(bad)} disagreements", dt,
                   {"grids": grids, "bad": bad})


def criterion_2_branch_equivalence(n_max: int = 500) -> Outcome:
    t0 = time.perf_counter()
    pairs = bad = 0
    first = None
    for m in range(2, n_max + 1):
        for n in range(m, n_max + 1):
            pairs += 1
            if upper_bound_bcc(m, n) != blocking_number_formula(m, n):
                bad += 1
                first = first or (m, n)
    dt = time.perf_counter() - t0
    return Outcome("C2", "two-branch bound equals closed form", bad == 0 and dt < 10,
                   f"{pairs} pairs, {bad} mismatches" + (f", first {first}" if first else ""), dt)


def criterion_3_witnesses(n_max: int = 100) -> Outcome:
    t0 = time.perf_counter()
    count = 0
    bad = []
    for m in range(2, n_max + 1):
        for n in range(m, n_max + 1):
            count += 1
            w = build_witness(m, n)
            blocking, stalled = verify_white_set(m, n, w.white)
            if not (blocking and stalled and w.size == blocking_number_formula(m, n)):
                bad.append((m, n))
    dt = time.perf_counter() - t0
    return Outcome("C3", "witness attainment", not bad and dt < 300,
                   f"{count} grids up to {n_max}, {len(bad)} failures", dt, {"bad": bad})


def criterion_4_gap_decompositions(n_max: int = 60) -> Outcome:
    t0 = time.perf_counter()
    with_dec = 0
    violations = []
    for m in range(2, n_max + 1):
        for n in range(m, n_max + 1):
            cs = [c for _, _, c in gap_decompositions(m, n)]
            if not cs:
                continue
            with_dec += 1
            p = qr_params(m, n)
            if max(cs) > p.q - _ceil_div(p.r, 2) or p.r > 2 * p.q:
                violations.append((m, n))
    dt = time.perf_counter() - t0
    return Outcome("C4", "gap decomposition bound", not violations,
                   f"{with_dec} pairs with a decomposition, {len(violations)} violations", dt)


def _min_sets(m: int, n: int, cap: int) -> list[frozenset]:
    g = grid_graph(m, n)
    value = min_blocking_grid(m, n).require()
    return [frozenset(g.points_of(s)) for s in enumerate_min_blocking_sets(g, value, cap).sets]


def criterion_5a_certificates(limit: int = 20, cap: int = 500) -> Outcome:
    t0 = time.perf_counter()
    total = 0
    failures = []
    for m, n in small_grids(limit):
        for s in _min_sets(m, n, cap):
            total += 1
            report = certify(m, n, s)
            if not report.passed:
                failures.append((m, n, sorted(s), [c.name for c in report.failures]))
    dt = time.perf_counter() - t0
    return Outcome("C5a", "certificates on enumerated minimum sets", not failures,
                   f"{total} sets on {len(small_grids(limit))} grids, {len(failures)} failures", dt,
                   {"failures": failures})


def criterion_5b_mutations(limit: int = 20, probes: int = 200, threshold: float = 0.95,
                           seed: int = 20240501, cap: int = 500) -> Outcome:
    """Random single add/remove mutations of minimum sets; each should fail a check."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    rates = {}
    for m, n in small_grids(limit):
        sets = _min_sets(m, n, cap)
        cells = [(x, y) for x in range(1, n + 1) for y in range(1, m + 1)]
        tally = {"add": [0, 0], "remove": [0, 0]}
        for _ in range(probes):
            s = rng.choice(sets)
            if rng.random() < 0.5:
                kind, mutant = "remove", s - {rng.choice(sorted(s))}
            else:
                kind, mutant = "add", s | {rng.choice([c for c in cells if c not in s])}
            tally[kind][1] += 1
            tally[kind][0] += not certify(m, n, mutant).passed
        caught = tally["add"][0] + tally["remove"][0]
        rates[(m, n)] = (caught / probes, tally)
    worst = min(rates, key=lambda k: rates[k][0])
    below = [k for k, (r, _) in rates.items() if r < threshold]
    dt = time.perf_counter() - t0
    detail = (f"{len(rates) - len(below)}/{len(rates)} grids reach {threshold:.0%}; "
              f"worst {worst[0]}x{worst[1]} at {rates[worst][0]:.1%}")
    return Outcome("C5b", "mutation probes detected", not below, detail, dt, {"rates": rates})


def random_instance(rng: random.Random, max_vertices: int = 24) -> tuple[Graph, int]:
    nv = rng.randint(1, max_vertices)
    p = rng.uniform(0.05, 0.6)
    edges = [(u, v) for u in range(nv) for v in range(u + 1, nv) if rng.random() < p]
    g = Graph.from_edges(nv, edges)
    q = rng.random()
    black = sum(1 << v for v in range(nv) if rng.random() < q)
    return g, black


def criterion_6_confluence(instances: int = 500, orders: int = 50, seed: int = 7) -> Outcome:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    bad = 0
    for _ in range(instances):
        g, black = random_instance(rng)
        ref, _ = closure(g, black)
        finals = {closure(g, black, random.Random(rng.random()))[0].black for _ in range(orders)}
        bad += finals != {ref.black}
    dt = time.perf_counter() - t0
    return Outcome("C6", "closure confluence", bad == 0,
                   f"{instances} instances x {orders} orders, {bad} divergent", dt)


def criterion_7_small_values() -> Outcome:
    t0 = time.perf_counter()
    bad = []
    for (m, n), expected in KNOWN_SMALL_VALUES.items():
        oracle, _ = exhaustive_blocking_number(grid_graph(m, n))
        found = {oracle, min_blocking_grid(m, n).value, blocking_number_formula(m, n)}
        if found != {expected}:
            bad.append((m, n, sorted(found)))
    dt = time.perf_counter() - t0
    return Outcome("C7", "known small values", not bad,
                   f"{len(KNOWN_SMALL_VALUES)} grids, {len(bad)} mismatches", dt)


ALL_CRITERIA = (
    criterion_1_formula_vs_search,
    criterion_2_branch_equivalence,
    criterion_3_witnesses,
    criterion_4_gap_decompositions,
    criterion_5a_certificates,
    criterion_5b_mutations,
    criterion_6_confluence,
    criterion_7_small_values,
)
