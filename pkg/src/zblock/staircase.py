"""Staircase certificates for zero blocking sets of grids.

Every check runs in a *frame*: one of the eight dihedral images of the grid
chosen so that the boundary side under study is the bottom row and the
window ray points northeast. Results are mapped back to grid coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .geometry import (Dir, HalfPoint, Polyline, Segment, hp, is_below, lattice_count,
                       offset, on_ray)

SIDES = ("XY", "ZW", "XZ", "YW")
DIRECTIONS = ("NE", "NW")
# North(C) in promotion priority order: NW, N, NE, then the point two above
_NORTH_PRIORITY = ((-1, 1), (0, 1), (1, 1), (0, 2))


class EmptyBoundary(ValueError):
    pass


@dataclass(frozen=True)
class Frame:
    side: str
    direction: str
    m: int  # grid dims (original orientation)
    n: int

    @property
    def dims(self) -> tuple[int, int]:
        """(rows, columns) of the grid as seen in this frame."""
        return (self.n, self.m) if self.side in ("XZ", "YW") else (self.m, self.n)

    def to_frame(self, p: HalfPoint) -> HalfPoint:
        M, N = 2 * (self.m + 1), 2 * (self.n + 1)
        dx, dy = p.dx, p.dy
        if self.side == "ZW":
            dy = M - dy
        elif self.side == "XZ":
            dx, dy = dy, dx
        elif self.side == "YW":
            dx, dy = dy, N - dx
        if self.direction == "NW":
            cols = self.dims[1]
            dx = 2 * (cols + 1) - dx
        return HalfPoint(dx, dy)

    def from_frame(self, p: HalfPoint) -> HalfPoint:
        M, N = 2 * (self.m + 1), 2 * (self.n + 1)
        dx, dy = p.dx, p.dy
        if self.direction == "NW":
            dx = 2 * (self.dims[1] + 1) - dx
        if self.side == "ZW":
            dy = M - dy
        elif self.side == "XZ":
            dx, dy = dy, dx
        elif self.side == "YW":
            dx, dy = N - dy, dx
        return HalfPoint(dx, dy)

    def label(self) -> str:
        return f"{self.side}/{self.direction}"


@dataclass(frozen=True)
class Staircase:
    """Bottom anchors and peaks of the staircase of one side, in frame coordinates."""

    frame: Frame
    anchors: tuple[int, ...]  # frame x of the white vertices on the frame's bottom row
    peaks: tuple[HalfPoint, ...]
    white: frozenset[tuple[int, int]]  # the whole white set, frame coordinates

    @property
    def side(self) -> str:
        return self.frame.side

    @property
    def m(self) -> int:
        return self.frame.dims[0]

    @property
    def n(self) -> int:
        return self.frame.dims[1]

    @property
    def polyline(self) -> Polyline:
        pts = [self.peaks[0]]
        for a, b in zip(self.anchors, self.peaks[1:]):
            pts += [hp(a, 1), b]
        return Polyline.through(pts)

    def y_at(self, x: int) -> int:
        """Height of the staircase over integer column x: one plus the distance to the nearest anchor."""
        return 1 + min(abs(x - a) for a in self.anchors)

    def to_grid(self, p) -> tuple:
        q = p if isinstance(p, HalfPoint) else hp(*p)
        return self.frame.from_frame(q).as_tuple()


def _frame_white(frame: Frame, white: Iterable) -> frozenset[tuple[int, int]]:
    return frozenset(frame.to_frame(hp(*p)).lattice() for p in white)


def staircase_in_frame(frame: Frame, white: Iterable) -> Staircase:
    fw = _frame_white(frame, white)
    m, n = frame.dims
    anchors = tuple(sorted(x for x, y in fw if y == 1))
    if not anchors:
        raise EmptyBoundary(f"no white vertex on side {frame.side}")
    peaks = [hp(1, anchors[0])]
    for a, b in zip(anchors, anchors[1:]):
        peaks.append(HalfPoint(a + b, b - a + 2))  # ((a+b)/2, (b-a)/2 + 1) doubled
    peaks.append(hp(n, n + 1 - anchors[-1]))
    return Staircase(frame, anchors, tuple(peaks), fw)


def build_staircase(m: int, n: int, white: Iterable, side: str = "XY") -> Staircase:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    return staircase_in_frame(Frame(side, "NE", m, n), white)


@dataclass
class CheckResult:
    name: str
    passed: bool
    where: str = ""
    counterexamples: list = field(default_factory=list)
    detail: str = ""
    checked: int = 1

    def to_json(self) -> dict:
        return {"check": self.name, "where": self.where, "pass": self.passed,
                "counterexamples": [list(p) for p in self.counterexamples],
                "detail": self.detail, "checked": self.checked}


@dataclass
class CertificateReport:
    checks: list[CheckResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"pass": self.passed, "checks": [c.to_json() for c in self.checks],
                "notes": self.notes}

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            tag = "pass" if c.passed else "FAIL"
            where = f"[{c.where}]" if c.where else ""
            extra = ""
            if not c.passed:
                extra = " at " + ", ".join(_fmt(p) for p in c.counterexamples[:5])
                if c.detail:
                    extra += f" ({c.detail})"
            out.append(f"{c.name}{where} {tag}{extra}")
        return out


def _fmt(p) -> str:
    return "(" + ",".join(str(v) for v in p) + ")"


# -- lemma checks ---------------------------------------------------------

def check_lemma2(m: int, n: int, white: Iterable) -> CheckResult:
    """Each white A meets North(A) if y_A < m, South(A) if y_A > 1, and so on, clipped to the grid."""
    ws = frozenset(white)
    bad = []
    sides = (("North", lambda x, y: y < m, ((-1, 1), (0, 1), (1, 1), (0, 2))),
             ("South", lambda x, y: y > 1, ((-1, -1), (0, -1), (1, -1), (0, -2))),
             ("East", lambda x, y: x < n, ((1, 1), (1, 0), (1, -1), (2, 0))),
             ("West", lambda x, y: x > 1, ((-1, 1), (-1, 0), (-1, -1), (-2, 0))))
    details = []
    for x, y in sorted(ws):
        for name, guard, offs in sides:
            if guard(x, y) and not any((x + ox, y + oy) in ws for ox, oy in offs):
                bad.append((x, y))
                details.append(f"{name}({x},{y})")
                break
    return CheckResult("lemma2", not bad, "", bad, " ".join(details[:5]), len(ws))


def check_lemma3(m: int, n: int, white: Iterable) -> CheckResult:
    """White set meets the first and last column, every consecutive column pair, and the same for rows."""
    ws = frozenset(white)
    cols = {x for x, _ in ws}
    rows = {y for _, y in ws}
    problems = []
    for label, have, size in (("column", cols, n), ("row", rows, m)):
        if 1 not in have:
            problems.append(f"{label} 1")
        if size not in have:
            problems.append(f"{label} {size}")
        for j in range(1, size):
            if j not in have and j + 1 not in have:
                problems.append(f"{label}s {j},{j + 1}")
    return CheckResult("lemma3", not problems, "", [], "; ".join(problems[:5]))


# -- staircase checks -----------------------------------------------------

def check_prop4(m: int, n: int, white: Iterable, st: Staircase) -> CheckResult:
    """Vertices strictly below the staircase are black; its other lattice vertices are white."""
    fw = st.white
    fm, fn = st.m, st.n
    bad = []
    for x, y in fw:
        if y < st.y_at(x):
            bad.append(st.to_grid((x, y)))
    interior = {p.lattice() for p in st.peaks[1:-1] if p.is_lattice}
    for x in range(1, fn + 1):
        y = st.y_at(x)
        if (x, y) in interior or not 1 <= y <= fm:
            continue
        if (x, y) not in fw:
            bad.append(st.to_grid((x, y)))
    return CheckResult("prop4", not bad, st.side, sorted(bad), "", 1)


def check_prop5(st: Staircase, m: int | None = None) -> CheckResult:
    """Interior peaks reach at most row m+1, the end peaks at most row m (frame height)."""
    fm = st.m if m is None else m
    bad = []
    last = len(st.peaks) - 1
    for i, p in enumerate(st.peaks):
        limit = fm if i in (0, last) else fm + 1
        if p.dy > 2 * limit:
            bad.append(st.to_grid(p))
    return CheckResult("prop5", not bad, st.side, bad)


@dataclass
class Window:
    """A staircase window from a bottom anchor A to a point B on its northeast ray (frame coords)."""

    staircase: Staircase
    base: HalfPoint
    tip: HalfPoint
    members: set[tuple[int, int]]
    holes: list[HalfPoint]
    promotions: dict[HalfPoint, tuple[int, int]]
    window_whites: set[tuple[int, int]]
    anomalies: list[tuple[str, HalfPoint]] = field(default_factory=list)

    @property
    def m(self) -> int:
        return self.staircase.m

    @property
    def n(self) -> int:
        return self.staircase.n

    @property
    def label(self) -> str:
        st = self.staircase
        return (f"{st.frame.label()} A={_fmt(st.to_grid(self.base))} "
                f"B={_fmt(st.to_grid(self.tip))}")

    def members_grid(self) -> list[tuple]:
        return sorted(self.staircase.to_grid(p) for p in self.members)

    def holes_grid(self) -> list[tuple]:
        return [self.staircase.to_grid(h) for h in self.holes]


def window_in_frame(st: Staircase, ax: int, tip: HalfPoint) -> Window:
    fw = st.white
    fm = st.m
    a = hp(ax, 1)
    if ax not in st.anchors:
        raise ValueError(f"{a} is not a white anchor of side {st.side}")
    if not on_ray(a, tip, Dir.NE) or tip.dx > 2 * st.n:
        raise ValueError(f"{tip} is not on the northeast ray of {a} within the grid width")
    lo, hi = 2 * ax, tip.dx

    def in_window_on_s(x, y):
        return lo <= 2 * x <= hi and st.y_at(x) == y

    whites = {(x, st.y_at(x)) for x in range(ax, hi // 2 + 1) if (x, st.y_at(x)) in fw}
    holes: list[HalfPoint] = []
    promos: dict[HalfPoint, tuple[int, int]] = {}
    anomalies = []
    last = len(st.peaks) - 1
    for i, peak in enumerate(st.peaks):
        if not (lo <= peak.dx <= hi) or not peak.is_lattice or peak.lattice() in fw:
            continue
        if i in (0, last):
            anomalies.append(("end peak not white", peak))
            continue
        px, py = peak.lattice()
        base = (px + 1, py - 1)
        if base not in fw:
            anomalies.append(("SE(B_i,1) not white", peak))
            continue
        if 2 * (px + 1) > hi:
            promos[peak] = base
            continue
        climb = [d for d in range(0, hi // 2 - base[0] + 1)
                 if in_window_on_s(base[0] + d, base[1] + d) and (base[0] + d, base[1] + d) in fw]
        d = max(climb)
        cx, cy = base[0] + d, base[1] + d
        if cy >= fm:
            holes.append(peak)
            continue
        target = next(((cx + ox, cy + oy) for ox, oy in _NORTH_PRIORITY
                       if (cx + ox, cy + oy) in fw), None)
        if target is None:
            anomalies.append(("North(C_i) has no white", hp(cx, cy)))
            continue
        promos[peak] = target
    members = set(whites) | set(promos.values())
    return Window(st, a, tip, members, holes, promos, whites, anomalies)



def compute_window(m: int, n: int, white: Iterable, a, b, direction: str = "NE",
                   side: str = "XY") -> Window:
    """Window of ``side``'s staircase from white anchor ``a`` to ``b`` (grid coordinates).

    ``direction`` names the ray as seen with ``side`` at the bottom; NW windows
    are computed as NE windows of the mirror image.
    """
    frame = Frame(side, direction, m, n)
    st = staircase_in_frame(frame, white)
    af = frame.to_frame(a if isinstance(a, HalfPoint) else hp(*a))
    bf = frame.to_frame(b if isinstance(b, HalfPoint) else hp(*b))
    if af.dy != 2 or not af.is_lattice:
        raise ValueError(f"{a} is not on side {side}")
    return window_in_frame(st, af.dx // 2, bf)


def _far(p: HalfPoint, direction: Dir, length: int) -> Segment:
    return Segment(p, offset(p, direction, length))


def check_prop6(w: Window) -> CheckResult:
    st = w.staircase
    bad = []
    details = []
    for what, p in w.anomalies:
        bad.append(st.to_grid(p))
        details.append(what)
    count = lattice_count(Segment(w.base, w.tip))
    if len(w.members) != count - len(w.holes):
        details.append(f"|W|={len(w.members)} but [AB]-|H|={count - len(w.holes)}")
    targets = list(w.promotions.values())
    if len(set(targets)) != len(targets):
        details.append("promotion map not injective")
    clash = [t for t in targets if t in w.window_whites]
    if clash:
        details.append("promotion lands on a window white")
        bad += [st.to_grid(t) for t in clash]
    q = offset(w.tip, Dir.SE, 1)
    envelope = [Segment(w.base, w.tip), Segment(w.tip, q)]
    for p in sorted(w.members):
        if not is_below(hp(*p), envelope):
            bad.append(st.to_grid(p))
            details.append("member above A-B-SE(B,1)")
    reach = 2 * (st.m + st.n) + 4
    for h in w.holes:
        if h.dy != 4:  # holes at height 2 only
            continue
        rays = [_far(offset(h, Dir.NW, 1), Dir.NW, reach), _far(offset(h, Dir.SE, 1), Dir.NE, reach)]
        for p in sorted(w.members):
            if not is_below(hp(*p), rays):
                bad.append(st.to_grid(p))
                details.append(f"member above the rays around hole {_fmt(st.to_grid(h))}")
    return CheckResult("prop6", not details, w.label, bad, "; ".join(details[:3]))


def check_prop7(w: Window, m: int | None = None, n: int | None = None) -> CheckResult:
    fm = w.m if m is None else m
    fn = w.n if n is None else n
    st = w.staircase
    problems = []
    bad = []
    xs = sorted(h.dx for h in w.holes)
    for h in w.holes:
        if h.dy not in (4, 2 * (fm + 1)) or h.dx > 2 * (fn - fm):
            problems.append("hole height/position")
            bad.append(st.to_grid(h))
    for u, v in zip(xs, xs[1:]):
        if v - u < 2 * (fm + 1):
            problems.append("holes closer than m+1 columns")
    near = [h for h in w.holes if w.base.dx < h.dx < w.base.dx + 2 * fm]
    if len(near) > 1 or any(h.dy != 4 for h in near):
        problems.append("hole within m columns of A")
        bad += [st.to_grid(h) for h in near]
    if w.tip.dx < w.base.dx + 2 * (fm + 1) and w.holes:
        problems.append("hole in a window shorter than m+1")
    return CheckResult("prop7", not problems, w.label, bad, "; ".join(problems[:3]))


def _tips(st: Staircase, ax: int):
    for t in range(0, 2 * (st.n - ax) + 1):
        yield HalfPoint(2 * ax + t, 2 + t)


def certify(m: int, n: int, white: Iterable, sides: Iterable[str] = SIDES,
            windows: bool = True) -> CertificateReport:
    """Run every certificate check on a white set of G_{m,n}; failures never abort the run."""
    ws = frozenset(tuple(p) for p in white)
    report = CertificateReport()
    report.checks.append(check_lemma2(m, n, ws))
    report.checks.append(check_lemma3(m, n, ws))
    report.notes.append("NW windows are the NE windows of the mirrored frame")
    for side in sides:
        try:
            st = build_staircase(m, n, ws, side)
        except EmptyBoundary as exc:
            report.checks.append(CheckResult("staircase", False, side, [], str(exc)))
            continue
        report.checks.append(check_prop4(m, n, ws, st))
        report.checks.append(check_prop5(st))
        if not windows:
            continue
        for direction in DIRECTIONS:
            fst = staircase_in_frame(Frame(side, direction, m, n), ws)
            r6 = CheckResult("prop6", True, fst.frame.label(), checked=0)
            r7 = CheckResult("prop7", True, fst.frame.label(), checked=0)
            for ax in fst.anchors:
                for tip in _tips(fst, ax):
                    w = window_in_frame(fst, ax, tip)
                    for agg, res in ((r6, check_prop6(w)), (r7, check_prop7(w))):
                        agg.checked += 1
                        if not res.passed and agg.passed:
                            agg.passed = False
                            agg.counterexamples = res.counterexamples
                            agg.detail = f"{res.where}: {res.detail}"
            report.checks += [r6, r7]
    return report
