"""SVG pictures of foliated hexagons in the Poincare disk.

Geodesic edges and hypercycle leaves are all circular arcs in the disk model;
each is drawn as the SVG arc through its two endpoints and one interior point.
"""

from __future__ import annotations

import numpy as np

from .hexagon import SymmetricHexagon, nonfoliated_region, placement, stretch
from .hplane import hyperboloid_to_disk

SIZE = 840
RADIUS = 400.0


def _px(p):
    return SIZE / 2 + RADIUS * p[0], SIZE / 2 - RADIUS * p[1]


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _arc_to(p1, pm, p2) -> str:
    """SVG path segment from ``p1`` (current point) to ``p2`` through ``pm``, pixel coords."""
    (x1, y1), (xm, ym), (x2, y2) = p1, pm, p2
    cross = (xm - x1) * (y2 - ym) - (ym - y1) * (x2 - xm)
    chord = np.hypot(x2 - x1, y2 - y1)
    if abs(cross) < 1e-9 * max(chord, 1.0) ** 2:
        return f"L {_fmt(x2)} {_fmt(y2)}"
    # circumcenter
    d = 2 * (x1 * (ym - y2) + xm * (y2 - y1) + x2 * (y1 - ym))
    s1, sm, s2 = x1 * x1 + y1 * y1, xm * xm + ym * ym, x2 * x2 + y2 * y2
    cx = (s1 * (ym - y2) + sm * (y2 - y1) + s2 * (y1 - ym)) / d
    cy = (s1 * (x2 - xm) + sm * (x1 - x2) + s2 * (xm - x1)) / d
    r = np.hypot(x1 - cx, y1 - cy)
    if r > 1e6:
        return f"L {_fmt(x2)} {_fmt(y2)}"
    sweep = 1 if cross > 0 else 0
    # major arc iff the center is on the same side of the chord as pm
    side_m = (x2 - x1) * (ym - y1) - (y2 - y1) * (xm - x1)
    side_c = (x2 - x1) * (cy - y1) - (y2 - y1) * (cx - x1)
    large = 1 if side_m * side_c > 0 else 0
    return f"A {_fmt(r)} {_fmt(r)} 0 {large} {sweep} {_fmt(x2)} {_fmt(y2)}"


def _curve(points) -> str:
    """Path through first, middle and last of ``points`` (disk coords)."""
    p1, pm, p2 = _px(points[0]), _px(points[len(points) // 2]), _px(points[-1])
    return f"M {_fmt(p1[0])} {_fmt(p1[1])} " + _arc_to(p1, pm, p2)


def _fermi_curve(hexagon: SymmetricHexagon, j: int, dist: float, n: int = 3):
    P = placement(hexagon)
    tau = np.linspace(-hexagon.half_short, hexagon.half_short, n)
    u, v = hyperboloid_to_disk(P.from_fermi(j, tau, np.full(n, dist)))
    return np.stack([u, v], axis=-1)


def _edges(hexagon: SymmetricHexagon) -> list[str]:
    P = placement(hexagon)
    V = P.vertices
    out = []
    for i in range(6):
        a, b = V[i], V[(i + 1) % 6]
        if i % 2 == 0:  # short edge j = i // 2
            pts = _fermi_curve(hexagon, i // 2, 0.0)
        else:  # long edge, its midpoint is the tangency point
            pts = np.array([a, P.long_midpoints[i // 2], b])
        out.append(_curve(pts))
    return out


def _core_path(hexagon: SymmetricHexagon) -> str:
    region = nonfoliated_region(hexagon, 3)
    start = _px(region.arc_samples[0, 0])
    parts = [f"M {_fmt(start[0])} {_fmt(start[1])}"]
    for j in range(3):
        a, m, b = (_px(p) for p in region.arc_samples[j])
        parts.append(_arc_to(a, m, b))
    return " ".join(parts) + " Z"


def render_svg(hexagon: SymmetricHexagon, k: float = 1.0, leaves: int = 8) -> str:
    """Foliated hexagon, its non-foliated core, and for ``k > 1`` the stretched hexagon on top."""
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<circle cx="{SIZE // 2}" cy="{SIZE // 2}" r="{_fmt(RADIUS)}" fill="none" stroke="#888" stroke-width="1"/>',
        f'<path d="{_core_path(hexagon)}" fill="#f2c14e" fill-opacity="0.5" stroke="none"/>',
    ]
    for j in range(3):
        for i in range(1, leaves + 1):
            pts = _fermi_curve(hexagon, j, hexagon.half_long * i / leaves)
            lines.append(f'<path d="{_curve(pts)}" fill="none" stroke="#3a6ea5" stroke-width="0.8"/>')
    for d in _edges(hexagon):
        lines.append(f'<path d="{d}" fill="none" stroke="#000" stroke-width="2"/>')
    if k > 1:
        target = stretch(hexagon, k)
        lines.append(f'<path d="{_core_path(target)}" fill="#c0392b" fill-opacity="0.4" stroke="none"/>')
        for d in _edges(target):
            lines.append(f'<path d="{d}" fill="none" stroke="#c0392b" stroke-width="1.5" '
                         f'stroke-dasharray="6 4"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
