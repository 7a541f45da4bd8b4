"""ASCII and SVG pictures of white sets on grids."""
from __future__ import annotations

from typing import Iterable

from .staircase import SIDES, EmptyBoundary, build_staircase


def ascii_grid(m: int, n: int, white: Iterable) -> str:
    """Rows from y=m down to y=1; 'W' marks white, '.' black."""
    ws = {tuple(p) for p in white}
    rows = []
    for y in range(m, 0, -1):
        rows.append("".join("W" if (x, y) in ws else "." for x in range(1, n + 1)))
    return "\n".join(rows) + "\n"


_CELL = 40
_COLORS = {"XY": "#c0392b", "ZW": "#2980b9", "XZ": "#27ae60", "YW": "#8e44ad"}


def svg_grid(m: int, n: int, white: Iterable, overlay: bool = False) -> str:
    ws = {tuple(p) for p in white}
    pad = _CELL
    width, height = (n - 1) * _CELL + 2 * pad, (m - 1) * _CELL + 2 * pad

    def sx(x):
        return pad + (x - 1) * _CELL

    def sy(y):
        return height - pad - (y - 1) * _CELL

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">']
    for x in range(1, n + 1):
        out.append(f'<line x1="{sx(x)}" y1="{sy(1)}" x2="{sx(x)}" y2="{sy(m)}" stroke="#ccc" stroke-width="3"/>')
    for y in range(1, m + 1):
        out.append(f'<line x1="{sx(1)}" y1="{sy(y)}" x2="{sx(n)}" y2="{sy(y)}" stroke="#ccc" stroke-width="3"/>')
    if overlay:
        for side in SIDES:
            try:
                st = build_staircase(m, n, ws, side)
            except EmptyBoundary:
                continue
            pts = " ".join(f"{sx(x)},{sy(y)}" for x, y in (st.to_grid(p) for p in st.polyline.vertices))
            out.append(f'<polyline points="{pts}" fill="none" stroke="{_COLORS[side]}" '
                       f'stroke-width="2" opacity="0.8"/>')
    for y in range(1, m + 1):
        for x in range(1, n + 1):
            if (x, y) in ws:
                out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="7" fill="white" stroke="black" stroke-width="2"/>')
            else:
                out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="5" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
