"""Deterministic SVG drawings of layouts."""

from __future__ import annotations

from dataclasses import dataclass

from .layout import Layout


@dataclass(frozen=True)
class RenderStyle:
    scale: int = 20
    gaps: bool = True
    labels: bool = False

    def __post_init__(self):
        if self.scale < 1:
            raise ValueError("scale must be at least 1")


def render_svg(l: Layout, style: RenderStyle = RenderStyle()) -> str:
    """SVG text with one ``rect`` per rectangle; y grows upward in layout space.

    With ``style.gaps`` the bounding box is shaded so uncovered area shows,
    and explicit gap rectangles are shaded too.
    """
    if not l.rects:
        raise ValueError("empty layout")
    s = style.scale
    x0 = min(r.x for r in l.rects)
    y0 = min(r.y for r in l.rects)
    W = max(r.x2 for r in l.rects) - x0
    H = max(r.y2 for r in l.rects) - y0
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W * s + 2}" height="{H * s + 2}" '
           f'viewBox="-1 -1 {W * s + 2} {H * s + 2}">']
    if style.gaps:
        out.append(f'<rect class="frame" x="0" y="0" width="{W * s}" height="{H * s}" fill="#d0d0d0"/>')
    for r in sorted(l.rects, key=lambda r: (r.is_gap, -1 if r.id is None else r.id, r.x, r.y)):
        x, y = (r.x - x0) * s, (H - (r.y2 - y0)) * s
        if r.is_gap:
            if style.gaps:
                out.append(f'<rect class="gap" x="{x}" y="{y}" width="{r.w * s}" height="{r.h * s}" '
                           f'fill="#d0d0d0" stroke="none"/>')
            continue
        out.append(f'<rect class="vertex" data-id="{r.id}" x="{x}" y="{y}" width="{r.w * s}" '
                   f'height="{r.h * s}" fill="#ffffff" stroke="#000000" stroke-width="1"/>')
        if style.labels:
            out.append(f'<text x="{x + r.w * s / 2:g}" y="{y + r.h * s / 2:g}" font-size="{max(6, s // 2)}" '
                       f'text-anchor="middle" dominant-baseline="central">{r.id}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
