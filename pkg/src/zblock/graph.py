"""Graphs with bit-parallel neighbor sets, grid construction and the edge-list format."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

DEFAULT_VERTEX_LIMIT = 10**6


class GraphFormatError(ValueError):
    pass


@dataclass(frozen=True)
class GridSpec:
    m: int  # rows (height)
    n: int  # columns (width)

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"grid dimensions must be positive, got {self.m}x{self.n}")

    def contains(self, x: int, y: int) -> bool:
        return 1 <= x <= self.n and 1 <= y <= self.m

    @property
    def corners(self) -> dict[str, tuple[int, int]]:
        return {"X": (1, 1), "Y": (self.n, 1), "Z": (1, self.m), "W": (self.n, self.m)}


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph on vertices 0..vertex_count-1."""

    vertex_count: int
    neighbors: tuple[tuple[int, ...], ...]
    grid: GridSpec | None = None
    _edges: int = field(default=0, repr=False)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]],
                   grid: GridSpec | None = None,
                   vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> "Graph":
        if vertex_count < 0:
            raise ValueError("negative vertex count")
        if vertex_count > vertex_limit:
            raise ValueError(f"{vertex_count} vertices exceeds the limit of {vertex_limit}")
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        count = sum(len(s) for s in nbrs) // 2
        return cls(vertex_count, tuple(tuple(sorted(s)) for s in nbrs), grid, count)

    def __len__(self) -> int:
        return self.vertex_count

    @property
    def edge_count(self) -> int:
        return self._edges

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in self.neighbors[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        masks = []
        for nb in self.neighbors:
            mask = 0
            for u in nb:
                mask |= 1 << u
            masks.append(mask)
        return tuple(masks)

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.vertex_count, self.neighbors, self.grid) == (
            other.vertex_count, other.neighbors, other.grid)

    def __hash__(self):
        return hash((self.vertex_count, self.neighbors, self.grid))

    # -- grid coordinates --------------------------------------------------

    def _require_grid(self) -> GridSpec:
        if self.grid is None:
            raise ValueError("graph has no grid coordinates")
        return self.grid

    def coords(self, v: int) -> tuple[int, int]:
        g = self._require_grid()
        if not 0 <= v < self.vertex_count:
            raise ValueError(f"vertex {v} out of range")
        return (v % g.n + 1, v // g.n + 1)

    def vertex_at(self, p) -> int:
        g = self._require_grid()
        x, y = (p.lattice() if hasattr(p, "lattice") else p)
        if not g.contains(x, y):
            raise ValueError(f"point ({x}, {y}) is outside the {g.m}x{g.n} grid")
        return (y - 1) * g.n + (x - 1)

    def mask_of(self, points: Iterable) -> int:
        mask = 0
        for p in points:
            mask |= 1 << (self.vertex_at(p) if self.grid is not None else p)
        return mask

    def points_of(self, mask: int) -> list:
        """Vertices of ``mask`` as grid coordinates (grids) or indices, ascending by index."""
        out = []
        v = 0
        while mask:
            if mask & 1:
                out.append(self.coords(v) if self.grid is not None else v)
            mask >>= 1
            v += 1
        return out


def grid_graph(m: int, n: int, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> Graph:
    """G_{m,n}: m rows, n columns, vertex (x, y) at index (y-1)*n + (x-1)."""
    spec = GridSpec(m, n)
    if m * n > vertex_limit:
        raise ValueError(f"{m}x{n} grid exceeds the limit of {vertex_limit} vertices")
    nbrs = []
    for y in range(1, m + 1):
        for x in range(1, n + 1):
            nb = []
            if y > 1:
                nb.append((y - 2) * n + x - 1)
            if x > 1:
                nb.append((y - 1) * n + x - 2)
            if x < n:
                nb.append((y - 1) * n + x)
            if y < m:
                nb.append(y * n + x - 1)
            nbrs.append(tuple(nb))
    return Graph(m * n, tuple(nbrs), spec, m * (n - 1) + n * (m - 1))


def parse_graph(text: str, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> Graph:
    """Parse the edge-list format: ``p <vertices> <edges>`` then ``e u v`` lines, 1-based."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty document")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "p":
        raise GraphFormatError(f"line 1: expected 'p <vertices> <edges>', got {lines[0]!r}")
    try:
        nv, _ne = int(head[1]), int(head[2])
    except ValueError:
        raise GraphFormatError(f"line 1: non-integer header {lines[0]!r}") from None
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "e":
            raise GraphFormatError(f"line {lineno}: expected 'e u v', got {ln!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {ln!r}") from None
        if not (1 <= u <= nv and 1 <= v <= nv):
            raise GraphFormatError(f"line {lineno}: vertex id out of range 1..{nv}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u - 1, v - 1))
    return Graph.from_edges(nv, edges, vertex_limit=vertex_limit)


def format_graph(g: Graph) -> str:
    edges = g.edges()
    out = [f"p {g.vertex_count} {len(edges)}"]
    out += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(out) + "\n"


def transpose_point(p: tuple[int, int]) -> tuple[int, int]:
    return (p[1], p[0])
