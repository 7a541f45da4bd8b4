"""Closed-form zero blocking numbers of grids and a verified optimal witness builder."""
from __future__ import annotations

from dataclasses import dataclass, field

from .forcing import closure
from .graph import grid_graph

MAX_FORMULA_N = 10**9


class UnsupportedGrid(ValueError):
    pass


class WitnessError(RuntimeError):
    pass


def _normalize(m: int, n: int) -> tuple[int, int]:
    if m > n:
        m, n = n, m
    if m < 2:
        raise UnsupportedGrid(f"closed forms need both sides >= 2, got {m}x{n}; use the solver")
    if n > MAX_FORMULA_N:
        raise UnsupportedGrid(f"n={n} exceeds {MAX_FORMULA_N}")
    return m, n


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class FormulaParams:
    m: int
    n: int
    q: int
    r: int

    @property
    def tight(self) -> bool:
        return self.r <= 2 * self.q

    @property
    def branch(self) -> str:
        return "tight" if self.tight else "wide"


def qr_params(m: int, n: int) -> FormulaParams:
    """(q, r) with n - m = q(m+1) - r and 0 <= r <= m."""
    m, n = _normalize(m, n)
    q = _ceil_div(n - m, m + 1)
    r = q * (m + 1) - (n - m)
    return FormulaParams(m, n, q, r)


def blocking_number_formula(m: int, n: int) -> int:
    p = qr_params(m, n)
    if p.tight:
        return p.n - p.q + _ceil_div(p.r, 2)
    return p.n - p.q + p.m - 1


def upper_bound_bcc(m: int, n: int) -> int:
    """The earlier two-branch upper bound on B(G_{m,n}), evaluated exactly as written."""
    m, n = _normalize(m, n)
    q = _ceil_div(n - m, m + 1)
    r = (m + 1) * q - (n - m)
    if q <= (n - m) // (m - 1):
        return m * (q + 1) - r // 2
    return n + m - (n - m) // (m + 1) - 2


def gap_decompositions(m: int, n: int):
    """All (a, b, c) >= 0 with a(m-1) + b*m + c(m+1) = n - m."""
    m, n = _normalize(m, n)
    gap = n - m
    for c in range(gap // (m + 1) + 1):
        rest = gap - c * (m + 1)
        for b in range(rest // m + 1):
            rest2 = rest - b * m
            if rest2 % (m - 1) == 0:
                yield (rest2 // (m - 1), b, c)


def lemma8_max_c(m: int, n: int) -> int | None:
    """Largest c over all gap decompositions, or None if none exists.

    Raises AssertionError if the maximum exceeds q - ceil(r/2) or r > 2q.
    """
    best = max((c for _, _, c in gap_decompositions(m, n)), default=None)
    if best is not None:
        p = qr_params(m, n)
        assert best <= p.q - _ceil_div(p.r, 2), (m, n, best)
        assert p.r <= 2 * p.q, (m, n)
    return best


@dataclass
class Witness:
    m: int
    n: int
    white: frozenset[tuple[int, int]]
    verified: bool = False
    construction: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.white)

    def sorted_points(self) -> list[tuple[int, int]]:
        return sorted(self.white)

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "white": [list(p) for p in self.sorted_points()]}


def _trace_path(m: int, n: int, turns: list[str], tail: int | None = None) -> list[tuple[int, int]]:
    """White lattice path bouncing between rows 1 and m, starting NE from (1, 1).

    Each full leg climbs or descends m-1 rows. Between legs a turn is taken on
    the boundary row: 'sharp' reflects in place, 'flat' adds one column on the
    row, 'hole' skips a column. With ``tail`` set, a final partial leg of that
    many columns follows a sharp turn, runs into the right wall, reflects back
    and is followed until it lands on the path again.
    """
    x, y, dy = 1, 1, 1
    pts = [(x, y)]
    legs = turns + ["end"]
    for t in legs:
        for _ in range(m - 1):
            x += 1
            y += dy
            pts.append((x, y))
        if t == "end":
            break
        if t == "flat":
            x += 1
            pts.append((x, y))
        elif t == "hole":
            x += 2
            pts.append((x, y))
        dy = -dy
    if tail is None:
        return pts
    dy = -dy
    for _ in range(tail):
        x += 1
        y += dy
        pts.append((x, y))
    seen = set(pts)
    dx = -1
    for _ in range(2 * (m + n)):
        if not 1 <= y + dy <= m:
            dy = -dy
        x += dx
        y += dy
        if (x, y) in seen:
            return pts
        pts.append((x, y))
        seen.add((x, y))
    raise WitnessError("return path never rejoined the main path")


def _plan(m: int, n: int) -> tuple[list[str], int | None, dict]:
    p = qr_params(m, n)
    if p.tight:
        c = p.q - _ceil_div(p.r, 2)
        rest = (n - m) - c * (m + 1)
        # fewest flat turns: b = 0 whenever the remainder is a multiple of m-1
        b = next(b for b in range(rest // m + 1) if (rest - b * m) % (m - 1) == 0)
        a = (rest - b * m) // (m - 1)
        turns = ["hole"] * c + ["flat"] * b + ["sharp"] * a
        return turns, None, {"branch": "tight", "a": a, "b": b, "c": c}
    tail = m + 1 - p.r
    turns = ["hole"] * (p.q - 1)
    return turns, tail, {"branch": "wide", "holes": p.q - 1, "tail": tail}


def verify_white_set(m: int, n: int, white) -> tuple[bool, bool]:
    """(is blocking, stalls immediately) for a white set of G_{m,n}."""
    g = grid_graph(m, n)
    mask = g.mask_of(white)
    final, trace = closure(g, g.full_mask & ~mask)
    return (not final.all_black, not trace)


def build_witness(m: int, n: int, fallback_limit: int = 40) -> Witness:
    """A verified minimum zero blocking set of G_{m,n} (coordinates in the given orientation)."""
    transposed = m > n
    mm, nn = (n, m) if transposed else (m, n)
    target = blocking_number_formula(mm, nn)
    turns, tail, info = _plan(mm, nn)
    pts = _trace_path(mm, nn, turns, tail)
    white = frozenset(pts)
    holes = []
    x_prev = None
    for x, _ in sorted(pts):
        if x_prev is not None and x > x_prev + 1:
            holes.extend(range(x_prev + 1, x))
        x_prev = x
    info.update(turns=turns, hole_columns=holes,
                anchors=sorted(p[0] for p in white if p[1] in (1, mm)))
    ok = len(white) == target and all(1 <= x <= nn and 1 <= y <= mm for x, y in white)
    if ok:
        blocking, stalled = verify_white_set(mm, nn, white)
        ok = blocking and stalled
    if not ok:
        if mm * nn > fallback_limit:
            raise WitnessError(f"construction failed for {mm}x{nn} and the grid is too large to search")
        from .solver import SearchBudget, min_blocking_grid
        res = min_blocking_grid(mm, nn, SearchBudget(witness_cap=1))
        if res.value != target or not res.witnesses:
            raise WitnessError(f"no witness of size {target} for {mm}x{nn}")
        g = grid_graph(mm, nn)
        white = frozenset(g.points_of(res.witnesses[0]))
        info = {"branch": info["branch"], "fallback": "search"}
        blocking, stalled = verify_white_set(mm, nn, white)
        if not (blocking and stalled):
            raise WitnessError("search witness failed verification")
    if transposed:
        white = frozenset((y, x) for x, y in white)
        info["transposed"] = True
    return Witness(m, n, white, verified=True, construction=info)
