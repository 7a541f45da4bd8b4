import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zblock.forcing import closure, is_blocking_set, is_stalled
from zblock.graph import Graph, grid_graph, parse_graph
from zblock.solver import (BudgetExhausted, SearchBudget, enumerate_min_blocking_sets,
                           exhaustive_blocking_number, failed_zero_forcing_number,
                           grid_symmetries, min_blocking_grid, min_blocking_number, orbit,
                           zero_forcing_number)

P4 = parse_graph("p 4 3\ne 1 2\ne 2 3\ne 3 4\n")


def brute_min_forts(g: Graph) -> tuple[int, set[frozenset]]:
    """Smallest size of a non-empty stalled white set, and all sets of that size.

    A minimum blocking set stalls immediately, so scanning stalled sets is
    enough; this avoids running closure at all.
    """
    for s in range(1, g.vertex_count + 1):
        found = set()
        for combo in itertools.combinations(range(g.vertex_count), s):
            white = set(combo)
            if all(sum(u in white for u in g.neighbors[v]) != 1
                   for v in range(g.vertex_count) if v not in white):
                found.add(frozenset(combo))
        if found:
            return s, found
    raise ValueError


def as_sets(masks) -> set[frozenset]:
    return {frozenset(v for v in range(m.bit_length()) if m >> v & 1) for m in masks}


@st.composite
def small_graphs(draw, max_vertices=9):
    nv = draw(st.integers(1, max_vertices))
    pairs = [(u, v) for u in range(nv) for v in range(u + 1, nv)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(nv, edges)


GRIDS_20 = [(m, n) for m in range(2, 11) for n in range(m, 11) if m * n <= 20]


class TestExamples:
    def test_min_blocking_number(self):
        assert min_blocking_number(grid_graph(2, 2)).value == 2
        assert min_blocking_number(grid_graph(1, 4)).value == 3
        assert min_blocking_number(grid_graph(3, 4)).value == 5

    @pytest.mark.parametrize("m,n,b", [(2, 3, 3), (2, 5, 4), (3, 3, 3)])
    def test_min_blocking_grid(self, m, n, b):
        res = min_blocking_grid(m, n)
        assert res.value == b and res.exhausted

    def test_enumerate_four_cycle(self):
        g = grid_graph(2, 2)
        sets = enumerate_min_blocking_sets(g, 2).sets
        assert sorted(sorted(g.points_of(s)) for s in sets) == [[(1, 1), (2, 2)], [(1, 2), (2, 1)]]

    def test_enumerate_path(self):
        sets = as_sets(enumerate_min_blocking_sets(P4, 3).sets)
        assert {frozenset({0, 2, 3}), frozenset({0, 1, 3})} <= sets

    def test_enumerate_two_by_three_touches_end_columns(self):
        g = grid_graph(2, 3)
        sets = enumerate_min_blocking_sets(g, 3).sets
        assert sets
        for s in sets:
            cols = {x for x, _ in g.points_of(s)}
            assert {1, 3} <= cols

    def test_failed_zero_forcing(self):
        assert failed_zero_forcing_number(grid_graph(2, 2)) == 2
        assert failed_zero_forcing_number(P4) == 1
        assert failed_zero_forcing_number(grid_graph(3, 4)) == 7

    def test_zero_forcing(self):
        assert zero_forcing_number(P4) == 1
        assert zero_forcing_number(grid_graph(2, 2)) == 2
        assert zero_forcing_number(grid_graph(3, 3)) == 3

    def test_json_shape(self):
        g = grid_graph(2, 2)
        doc = min_blocking_grid(2, 2).to_json(g)
        assert set(doc) == {"value", "witnesses", "exhausted", "nodes"}
        assert doc["value"] == 2 and doc["exhausted"] is True
        assert all(len(p) == 2 for p in doc["witnesses"][0])


class TestOracleAgreement:
    @pytest.mark.parametrize("m,n", GRIDS_20)
    def test_grid_search_matches_unpruned(self, m, n):
        g = grid_graph(m, n)
        value, hits = exhaustive_blocking_number(g)
        assert min_blocking_grid(m, n).value == value
        assert min_blocking_number(g).value == value
        assert as_sets(enumerate_min_blocking_sets(g, value).sets) == as_sets(hits)

    @pytest.mark.parametrize("m,n", [(2, 4), (3, 3), (3, 4), (4, 4)])
    def test_grid_enumeration_recovers_all_orbits(self, m, n):
        g = grid_graph(m, n)
        value, hits = exhaustive_blocking_number(g)
        res = min_blocking_grid(m, n, enumerate_cap=10**6)
        assert as_sets(res.witnesses) == as_sets(hits) and not res.capped

    @settings(max_examples=60, deadline=None)
    @given(small_graphs())
    def test_generic_solver_matches_brute_force(self, g):
        value, forts = brute_min_forts(g)
        res = min_blocking_number(g)
        assert res.value == value
        assert as_sets(enumerate_min_blocking_sets(g, value, cap=10**6).sets) == forts

    @pytest.mark.parametrize("m,n", GRIDS_20)
    def test_minimum_witnesses_stall_immediately(self, m, n):
        g = grid_graph(m, n)
        res = min_blocking_grid(m, n, enumerate_cap=500)
        for w in res.witnesses:
            assert is_blocking_set(g, w)
            _, trace = closure(g, g.full_mask & ~w)
            assert trace == []

    @settings(max_examples=40, deadline=None)
    @given(small_graphs(7), st.data())
    def test_blocking_is_monotone(self, g, data):
        w0 = data.draw(st.integers(0, g.full_mask))
        w1 = w0 | data.draw(st.integers(0, g.full_mask))
        if is_blocking_set(g, w0):
            assert is_blocking_set(g, w1)


class TestSymmetry:
    @pytest.mark.parametrize("m,n,order", [(2, 3, 4), (3, 3, 8), (4, 4, 8), (3, 5, 4)])
    def test_group_order(self, m, n, order):
        perms = grid_symmetries(grid_graph(m, n))
        assert len({tuple(p) for p in perms}) == order

    def test_orbit_of_diagonal(self):
        g = grid_graph(2, 2)
        assert len(orbit(grid_symmetries(g), g.mask_of([(1, 1), (2, 2)]))) == 2

    @pytest.mark.parametrize("m,n", [(3, 4), (3, 3)])
    def test_symmetries_are_automorphisms(self, m, n):
        g = grid_graph(m, n)
        edges = set(g.edges())
        for p in grid_symmetries(g):
            assert {tuple(sorted((p[u], p[v]))) for u, v in edges} == edges


class TestBudget:
    def test_tiny_budget_reports_no_value(self):
        res = min_blocking_grid(4, 7, SearchBudget(max_subsets=5))
        assert res.value is None and not res.exhausted
        with pytest.raises(BudgetExhausted):
            res.require()

    def test_enumeration_budget_raises(self):
        with pytest.raises(BudgetExhausted):
            enumerate_min_blocking_sets(grid_graph(3, 5), 5, budget=SearchBudget(max_subsets=3))

    def test_invalid_budget(self):
        with pytest.raises(ValueError):
            SearchBudget(max_seconds=0)

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("ZB_DEFAULT_BUDGET_SECS", "12.5")
        assert SearchBudget().max_seconds == 12.5


def test_results_independent_of_worker_count():
    one = min_blocking_grid(3, 5, workers=1)
    two = min_blocking_grid(3, 5, workers=2)
    assert (one.value, one.witnesses) == (two.value, two.witnesses)
    g = grid_graph(2, 4)
    assert min_blocking_number(g, workers=2).witnesses == min_blocking_number(g).witnesses


def test_is_stalled_for_generic_witness():
    g = grid_graph(1, 6)
    res = min_blocking_number(g)
    assert is_stalled(g, g.full_mask & ~res.witnesses[0])
