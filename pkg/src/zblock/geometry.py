"""Exact planar primitives on the half-integer lattice.

Points are stored with doubled coordinates so every midpoint and half step
used by the staircase machinery stays in integer arithmetic.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _double(value) -> int:
    """Return 2*value as an int, insisting that value is a half-integer."""
    doubled = Fraction(value) * 2
    if doubled.denominator != 1:
        raise ValueError(f"{value!r} is not a multiple of 1/2")
    return int(doubled)


def _undouble(d: int):
    return d // 2 if d % 2 == 0 else d / 2


@dataclass(frozen=True, order=True)
class HalfPoint:
    dx: int
    dy: int

    @classmethod
    def of(cls, x, y) -> "HalfPoint":
        return cls(_double(x), _double(y))

    @property
    def x(self):
        return _undouble(self.dx)

    @property
    def y(self):
        return _undouble(self.dy)

    @property
    def is_lattice(self) -> bool:
        return self.dx % 2 == 0 and self.dy % 2 == 0

    def as_tuple(self) -> tuple:
        return (self.x, self.y)

    def lattice(self) -> tuple[int, int]:
        if not self.is_lattice:
            raise ValueError(f"{self} is not a lattice point")
        return (self.dx // 2, self.dy // 2)

    def __repr__(self) -> str:
        return f"HalfPoint({self.x}, {self.y})"


def hp(x, y) -> HalfPoint:
    return HalfPoint.of(x, y)


class Dir(enum.Enum):
    N = (0, 1)
    NE = (1, 1)
    E = (1, 0)
    SE = (1, -1)
    S = (0, -1)
    SW = (-1, -1)
    W = (-1, 0)
    NW = (-1, 1)

    @property
    def vec(self) -> tuple[int, int]:
        return self.value


def offset(a: HalfPoint, direction: Dir, d=1) -> HalfPoint:
    """The point at distance ``d`` from ``a`` along ``direction`` (per-axis distance)."""
    dd = _double(d)
    if dd < 0:
        raise ValueError("offset distance must be nonnegative")
    ux, uy = direction.vec
    return HalfPoint(a.dx + ux * dd, a.dy + uy * dd)


class Side(enum.Enum):
    NORTH = "North"
    SOUTH = "South"
    EAST = "East"
    WEST = "West"


# North(A) = {NW(A,1), N(A,1), NE(A,1), N(A,2)}; the others are rotations.
_SIDE_OFFSETS = {
    Side.NORTH: ((-1, 1), (0, 1), (1, 1), (0, 2)),
    Side.SOUTH: ((-1, -1), (0, -1), (1, -1), (0, -2)),
    Side.EAST: ((1, 1), (1, 0), (1, -1), (2, 0)),
    Side.WEST: ((-1, 1), (-1, 0), (-1, -1), (-2, 0)),
}


def neighborhood_offsets(side: Side) -> tuple[tuple[int, int], ...]:
    """Integer offsets of the four points of ``side``, in NW, N, NE, N2 order (rotated)."""
    return _SIDE_OFFSETS[side]


def neighborhood_set(a: HalfPoint, side: Side) -> frozenset[HalfPoint]:
    if not a.is_lattice:
        raise ValueError("neighborhood sets are defined for lattice points only")
    return frozenset(HalfPoint(a.dx + 2 * ox, a.dy + 2 * oy) for ox, oy in _SIDE_OFFSETS[side])


class SlopeClass(enum.Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    DIAG_UP = "diagUp"
    DIAG_DOWN = "diagDown"


def _slope_class(a: HalfPoint, b: HalfPoint) -> SlopeClass:
    ddx, ddy = b.dx - a.dx, b.dy - a.dy
    if ddy == 0:
        return SlopeClass.HORIZONTAL
    if ddx == 0:
        return SlopeClass.VERTICAL
    if ddy == ddx:
        return SlopeClass.DIAG_UP
    if ddy == -ddx:
        return SlopeClass.DIAG_DOWN
    raise ValueError(f"segment {a}-{b} is not horizontal, vertical or of slope +-1")


@dataclass(frozen=True)
class Segment:
    a: HalfPoint
    b: HalfPoint

    def __post_init__(self):
        _slope_class(self.a, self.b)  # validates

    @property
    def slope_class(self) -> SlopeClass:
        return _slope_class(self.a, self.b)

    def y_range_at(self, dx: int) -> tuple[int, int] | None:
        """Doubled y-interval of the segment over doubled abscissa ``dx``, or None."""
        lo, hi = sorted((self.a.dx, self.b.dx))
        if not lo <= dx <= hi:
            return None
        if self.a.dx == self.b.dx:
            return tuple(sorted((self.a.dy, self.b.dy)))
        # slope is 0 or +-1, so the interpolation stays integral
        slope = (self.b.dy - self.a.dy) // (self.b.dx - self.a.dx)
        y = self.a.dy + slope * (dx - self.a.dx)
        return (y, y)

    def contains(self, p: HalfPoint) -> bool:
        rng = self.y_range_at(p.dx)
        return rng is not None and rng[0] <= p.dy <= rng[1]

    def lattice_points(self) -> list[tuple[int, int]]:
        pts = []
        lo, hi = sorted((self.a.dx, self.b.dx))
        if lo == hi:
            if lo % 2:
                return []
            ylo, yhi = sorted((self.a.dy, self.b.dy))
            return [(lo // 2, y) for y in range(_ceil_half(ylo), yhi // 2 + 1)]
        for x in range(_ceil_half(lo), hi // 2 + 1):
            y = self.y_range_at(2 * x)[0]
            if y % 2 == 0:
                pts.append((x, y // 2))
        return pts


def _ceil_half(d: int) -> int:
    return -((-d) // 2)


def _count_even(lo: int, hi: int) -> int:
    """Number of even integers in [lo, hi]."""
    if hi < lo:
        return 0
    return hi // 2 - _ceil_half(lo) + 1


def lattice_count(s: Segment) -> int:
    """Number of lattice points on the closed segment."""
    a, b = s.a, s.b
    cls = s.slope_class
    if cls is SlopeClass.HORIZONTAL:
        return 0 if a.dy % 2 else _count_even(*sorted((a.dx, b.dx)))
    if cls is SlopeClass.VERTICAL:
        return 0 if a.dx % 2 else _count_even(*sorted((a.dy, b.dy)))
    # along a diagonal the doubled coordinates differ (or sum) to a constant;
    # an odd constant means no point of the line is a lattice point
    k = a.dy - a.dx if cls is SlopeClass.DIAG_UP else a.dy + a.dx
    if k % 2:
        return 0
    return _count_even(*sorted((a.dx, b.dx)))


def on_ray(a: HalfPoint, b: HalfPoint, direction: Dir) -> bool:
    ux, uy = direction.vec
    tx, ty = b.dx - a.dx, b.dy - a.dy
    if ux == 0:
        return tx == 0 and ty * uy >= 0
    if uy == 0:
        return ty == 0 and tx * ux >= 0
    return tx * ux >= 0 and tx * ux == ty * uy


def half_extend(a: HalfPoint, b: HalfPoint, sign: str) -> Segment:
    """Segment A..NE(B,1/2) for sign '+', A..SW(B,1/2) for sign '-'; B must lie on NE(A)."""
    if not on_ray(a, b, Dir.NE):
        raise ValueError(f"{b} is not on the northeast ray of {a}")
    if sign == "+":
        return Segment(a, HalfPoint(b.dx + 1, b.dy + 1))
    if sign == "-":
        return Segment(a, HalfPoint(b.dx - 1, b.dy - 1))
    raise ValueError("sign must be '+' or '-'")


@dataclass(frozen=True)
class Polyline:
    vertices: tuple[HalfPoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise ValueError("empty polyline")
        for p, q in zip(self.vertices, self.vertices[1:]):
            _slope_class(p, q)

    @classmethod
    def through(cls, points: Iterable[HalfPoint]) -> "Polyline":
        pts: list[HalfPoint] = []
        for p in points:
            if not pts or pts[-1] != p:
                pts.append(p)
        return cls(tuple(pts))

    def segments(self) -> list[Segment]:
        if len(self.vertices) == 1:
            return [Segment(self.vertices[0], self.vertices[0])]
        return [Segment(p, q) for p, q in zip(self.vertices, self.vertices[1:])]

    def y_ranges_at(self, dx: int) -> list[tuple[int, int]]:
        return [r for s in self.segments() if (r := s.y_range_at(dx)) is not None]

    def contains(self, p: HalfPoint) -> bool:
        return any(lo <= p.dy <= hi for lo, hi in self.y_ranges_at(p.dx))

    def lattice_points(self) -> list[tuple[int, int]]:
        seen = {}
        for s in self.segments():
            for pt in s.lattice_points():
                seen.setdefault(pt, None)
        return list(seen)


class Relation(enum.Enum):
    STRICTLY_BELOW = "strictlyBelow"
    ON = "on"
    BELOW = "below"
    ABOVE = "above"
    STRICTLY_ABOVE = "strictlyAbove"
    INCOMPARABLE = "incomparable"


def relation(a: HalfPoint, p: Polyline) -> Relation:
    """Position of ``a`` against ``p`` along the vertical line x = x_a.

    Only polylines that double back in x can pass both above and below ``a``;
    for those the result is BELOW or ABOVE depending on which side holds the
    nearer point (ties go to BELOW).
    """
    ranges = p.y_ranges_at(a.dx)
    if not ranges:
        return Relation.INCOMPARABLE
    if any(lo <= a.dy <= hi for lo, hi in ranges):
        return Relation.ON
    ups = [lo - a.dy for lo, _ in ranges if lo > a.dy]
    downs = [a.dy - hi for _, hi in ranges if hi < a.dy]
    if not downs:
        return Relation.STRICTLY_BELOW
    if not ups:
        return Relation.STRICTLY_ABOVE
    return Relation.BELOW if min(ups) <= min(downs) else Relation.ABOVE


def is_below(a: HalfPoint, shapes: Sequence[Polyline | Segment], strict: bool = False) -> bool:
    """Existential 'below': some point of one of ``shapes`` shares x_a and lies at or above a."""
    for s in shapes:
        ranges = s.y_ranges_at(a.dx) if isinstance(s, Polyline) else (
            [r] if (r := s.y_range_at(a.dx)) is not None else [])
        for _, hi in ranges:
            if hi > a.dy or (not strict and hi == a.dy):
                return True
    return False
