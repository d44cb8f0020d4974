"""SVG pictures of point sets: layers color-coded, labeling tree overlaid."""
from __future__ import annotations

from typing import Sequence

from .geometry import Point
from .tree import Labeling

PALETTE = ["#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d"]


def svg_document(layers: Sequence[Sequence[Point]], labeling: Labeling | None = None,
                 size: int = 800, margin: int = 20) -> str:
    """``layers`` innermost first, each in ccw order."""
    pts = [p for layer in layers for p in layer]
    if not pts:
        return f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}"/>\n'
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    x0, y0 = min(xs), min(ys)
    span = max(max(xs) - x0, max(ys) - y0, 1)
    scale = (size - 2 * margin) / span

    def at(p):
        return (margin + (p[0] - x0) * scale, size - margin - (p[1] - y0) * scale)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">',
           f'<rect width="{size}" height="{size}" fill="white"/>']
    if labeling is not None:
        shape = labeling.shape
        out.append('<g stroke="#999" stroke-width="0.6">')
        for u, p in labeling.items():
            parent = shape.parent(u)
            if parent is None or not shape.is_labeled(parent):
                continue
            (ax, ay), (bx, by) = at(labeling.label(parent)), at(p)
            out.append(f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}"/>')
        out.append("</g>")
    r = max(1.0, min(4.0, 400 / len(pts) ** 0.5))
    for j, layer in enumerate(layers, start=1):
        color = PALETTE[(j - 1) % len(PALETTE)]
        if len(layer) > 1:
            path = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(at, layer))
            out.append(f'<polygon class="layer-{j}" points="{path}" fill="none" '
                       f'stroke="{color}" stroke-width="1"/>')
        out.append(f'<g class="layer-{j}-points" fill="{color}">')
        for x, y in map(at, layer):
            out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r:.2f}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
