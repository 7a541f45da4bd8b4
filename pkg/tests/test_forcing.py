import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zblock.forcing import (ColorState, closure, is_blocking_set, is_stalled,
                            is_zero_forcing_set, trace_to_json)
from zblock.graph import Graph, grid_graph, parse_graph

P3 = parse_graph("p 3 2\ne 1 2\ne 2 3\n")


@st.composite
def instances(draw, max_vertices=14):
    nv = draw(st.integers(1, max_vertices))
    pairs = [(u, v) for u in range(nv) for v in range(u + 1, nv)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    black = draw(st.integers(0, (1 << nv) - 1))
    return Graph.from_edges(nv, edges), black


def naive_closure(g: Graph, black: int) -> int:
    """Sweep all vertices until nothing changes."""
    changed = True
    while changed:
        changed = False
        for v in range(g.vertex_count):
            if black >> v & 1:
                white = [u for u in g.neighbors[v] if not black >> u & 1]
                if len(white) == 1:
                    black |= 1 << white[0]
                    changed = True
    return black


def replay(g: Graph, black: int, trace) -> int:
    for forcer, forced in trace:
        assert black >> forcer & 1
        white = [u for u in g.neighbors[forcer] if not black >> u & 1]
        assert white == [forced]
        black |= 1 << forced
    return black


class TestClosure:
    def test_path_endpoints(self):
        final, trace = closure(P3, ColorState.from_black(P3, [0, 2]))
        assert final.all_black and len(trace) == 1

    def test_all_black_is_fixed(self):
        g = grid_graph(3, 3)
        final, trace = closure(g, g.full_mask)
        assert final.black == g.full_mask and trace == []

    def test_diagonal_fort_of_four_cycle(self):
        g = grid_graph(2, 2)
        start = ColorState.from_white(g, [(1, 1), (2, 2)])
        final, trace = closure(g, start)
        assert final == start and trace == []

    def test_trace_json_uses_coordinates(self):
        g = grid_graph(2, 3)
        _, trace = closure(g, ColorState.from_white(g, [(1, 1)]))
        assert trace_to_json(g, trace) == [[[2, 1], [1, 1]]]
        _, trace = closure(P3, ColorState.from_black(P3, [0]))
        assert trace_to_json(P3, trace) == [[1, 2], [2, 3]]

    @given(instances())
    def test_matches_naive_fixed_point(self, inst):
        g, black = inst
        final, trace = closure(g, black)
        assert final.black == naive_closure(g, black)
        assert replay(g, black, trace) == final.black
        assert is_stalled(g, final)

    @given(instances(), st.integers(0, 2**32))
    def test_random_order_is_confluent(self, inst, seed):
        g, black = inst
        final, trace = closure(g, black, random.Random(seed))
        assert final.black == closure(g, black)[0].black
        assert replay(g, black, trace) == final.black

    @given(instances(), st.integers(0, 2**14 - 1))
    def test_monotone_in_initial_set(self, inst, extra):
        g, black = inst
        more = black | (extra & g.full_mask)
        assert closure(g, black)[0].black & ~closure(g, more)[0].black == 0


class TestPredicates:
    def test_zero_forcing_examples(self):
        assert is_zero_forcing_set(P3, [0, 2])
        assert not is_zero_forcing_set(P3, [])
        g = grid_graph(6, 11)
        assert is_zero_forcing_set(g, [(x, 1) for x in range(1, 12)])

    def test_blocking_examples(self):
        g = grid_graph(2, 2)
        assert is_blocking_set(g, [(1, 1), (2, 2)])
        assert not is_blocking_set(g, [(1, 1)])
        assert not is_blocking_set(g, [])

    def test_stalled_examples(self):
        assert is_stalled(P3, P3.full_mask)
        assert not is_stalled(P3, ColorState.from_black(P3, [0, 2]))
        g = grid_graph(3, 4)
        assert is_stalled(g, ColorState.from_white(g, [(1, 1), (2, 2), (3, 1), (3, 3), (4, 2)]))

    @settings(max_examples=50)
    @given(instances(10))
    def test_blocking_iff_complement_fails(self, inst):
        g, white = inst
        white_pts = [v for v in range(g.vertex_count) if white >> v & 1]
        black_pts = [v for v in range(g.vertex_count) if not white >> v & 1]
        assert is_blocking_set(g, white_pts) == (not is_zero_forcing_set(g, black_pts))
