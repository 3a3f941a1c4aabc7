"""Static SVG pictures of planar sets clipped to a box."""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import List, Sequence, Tuple

from .polyhedra import Halfspace, HRep, Polyhedron

COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")


def ccw_vertices(p: Polyhedron) -> List[Tuple[Fraction, Fraction]]:
    """Distinct vertices of a bounded planar polyhedron in counterclockwise order."""
    pts = list(dict.fromkeys(p.vrep.vertices))
    if len(pts) < 3:
        return pts
    cx = sum(x for x, _ in pts) / len(pts)
    cy = sum(y for _, y in pts) / len(pts)

    def half(dx, dy):
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(a, b):
        ax, ay, bx, by = a[0] - cx, a[1] - cy, b[0] - cx, b[1] - cy
        ha, hb = half(ax, ay), half(bx, by)
        if ha != hb:
            return ha - hb
        cross = ax * by - ay * bx
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return sorted(pts, key=functools.cmp_to_key(cmp))


def clip(p: Polyhedron, radius) -> Polyhedron:
    r = Fraction(radius)
    box = (Halfspace((1, 0), r), Halfspace((-1, 0), r), Halfspace((0, 1), r), Halfspace((0, -1), r))
    return Polyhedron(hrep=HRep(2, p.hrep.halfspaces + box))


def render(sets: Sequence[Tuple[str, Polyhedron]], radius=10, size: int = 400) -> str:
    """SVG document drawing each labeled planar set inside ``[-radius, radius]^2``."""
    r = float(radius)
    scale = size / (2 * r)

    def pt(x, y):
        return f"{(float(x) + r) * scale:.2f},{(r - float(y)) * scale:.2f}"

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
             f'<rect width="{size}" height="{size}" fill="white" stroke="black"/>',
             f'<line x1="0" y1="{size / 2}" x2="{size}" y2="{size / 2}" stroke="#999"/>',
             f'<line x1="{size / 2}" y1="0" x2="{size / 2}" y2="{size}" stroke="#999"/>']
    for i, (label, p) in enumerate(sets):
        if p.dim != 2:
            raise ValueError("only planar sets can be drawn")
        color = COLORS[i % len(COLORS)]
        verts = ccw_vertices(clip(p, radius)) if not p.is_empty else []
        if len(verts) >= 3:
            points = " ".join(pt(x, y) for x, y in verts)
            parts.append(f'<polygon points="{points}" fill="{color}" fill-opacity="0.3" stroke="{color}"/>')
        elif len(verts) == 2:
            (x0, y0), (x1, y1) = verts
            a, b = pt(x0, y0).split(","), pt(x1, y1).split(",")
            parts.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" stroke="{color}" stroke-width="2"/>')
        elif len(verts) == 1:
            a = pt(*verts[0]).split(",")
            parts.append(f'<circle cx="{a[0]}" cy="{a[1]}" r="3" fill="{color}"/>')
        parts.append(f'<text x="8" y="{20 + 16 * i}" fill="{color}" font-family="monospace">{label}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
