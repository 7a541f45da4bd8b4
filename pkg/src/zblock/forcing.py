"""Zero forcing dynamics: closure, stall detection, forcing/blocking tests."""
from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph

ForceTrace = list[tuple[int, int]]


@dataclass(frozen=True)
class ColorState:
    """Black/white coloring as a bitmask of black vertices."""

    black: int
    size: int

    @classmethod
    def from_black(cls, g: Graph, vertices: Iterable) -> "ColorState":
        return cls(g.mask_of(vertices), g.vertex_count)

    @classmethod
    def from_white(cls, g: Graph, vertices: Iterable) -> "ColorState":
        return cls(g.full_mask & ~g.mask_of(vertices), g.vertex_count)

    @property
    def white(self) -> int:
        return ((1 << self.size) - 1) & ~self.black

    def is_black(self, v: int) -> bool:
        return bool(self.black >> v & 1)

    @property
    def all_black(self) -> bool:
        return self.white == 0


def _as_mask(g: Graph, vertices) -> int:
    """Accept a bitmask or an iterable of vertex ids / grid points."""
    if isinstance(vertices, int):
        return vertices & g.full_mask
    return g.mask_of(vertices)


def _as_state(g: Graph, state) -> ColorState:
    if isinstance(state, ColorState):
        return state
    return ColorState(_as_mask(g, state), g.vertex_count)


def _white_counts(g: Graph, black: int) -> list[int]:
    counts = []
    for nb in g.neighbors:
        c = 0
        for u in nb:
            if not black >> u & 1:
                c += 1
        counts.append(c)
    return counts


def closure(g: Graph, initial, rng: random.Random | None = None) -> tuple[ColorState, ForceTrace]:
    """Apply the forcing rule until no black vertex has exactly one white neighbor.

    By default the smallest-index applicable forcer acts first; pass ``rng``
    to pick uniformly among applicable forces instead.
    """
    state = _as_state(g, initial)
    black = state.black
    counts = _white_counts(g, black)
    nbrs = g.neighbors
    is_black = [bool(black >> v & 1) for v in range(g.vertex_count)]
    trace: ForceTrace = []

    def unique_white(v):
        for u in nbrs[v]:
            if not is_black[u]:
                return u
        raise AssertionError("counter out of sync")

    def blacken(w):
        is_black[w] = True
        for u in nbrs[w]:
            counts[u] -= 1

    if rng is None:
        heap = [v for v in range(g.vertex_count) if is_black[v] and counts[v] == 1]
        heapq.heapify(heap)
        while heap:
            v = heapq.heappop(heap)
            if counts[v] != 1:
                continue
            w = unique_white(v)
            trace.append((v, w))
            blacken(w)
            for u in nbrs[w]:
                if is_black[u] and counts[u] == 1:
                    heapq.heappush(heap, u)
            if counts[w] == 1:
                heapq.heappush(heap, w)
    else:
        cands = {v for v in range(g.vertex_count) if is_black[v] and counts[v] == 1}
        while cands:
            v = rng.choice(sorted(cands))
            w = unique_white(v)
            trace.append((v, w))
            blacken(w)
            for u in (*nbrs[w], w):
                if is_black[u] and counts[u] == 1:
                    cands.add(u)
                else:
                    cands.discard(u)
            cands.discard(v)

    final = 0
    for v, b in enumerate(is_black):
        if b:
            final |= 1 << v
    return ColorState(final, g.vertex_count), trace


def is_stalled(g: Graph, state) -> bool:
    black = _as_state(g, state).black
    for v, nb in enumerate(g.neighbors):
        if black >> v & 1:
            whites = 0
            for u in nb:
                if not black >> u & 1:
                    whites += 1
            if whites == 1:
                return False
    return True


def is_zero_forcing_set(g: Graph, black) -> bool:
    final, _ = closure(g, _as_state(g, black))
    return final.all_black


def is_blocking_set(g: Graph, white) -> bool:
    """True iff starting with ``white`` white, some vertex stays white."""
    state = ColorState(g.full_mask & ~_as_mask(g, white), g.vertex_count)
    final, _ = closure(g, state)
    return not final.all_black


def trace_to_json(g: Graph, trace: ForceTrace) -> list:
    """Force pairs as [[x,y],[x,y]] for grids, 1-based [u, v] otherwise."""
    if g.grid is not None:
        return [[list(g.coords(u)), list(g.coords(v))] for u, v in trace]
    return [[u + 1, v + 1] for u, v in trace]
