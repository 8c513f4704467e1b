"""Deterministic SVG drawings of staircase paths and their height polygons."""

from __future__ import annotations

from .minmax import _degree_one_polygons, vertex_chain
from .words import content, path

PATH_COLOURS = ("#000000", "#d62728")
A_FILL = "#1f77b4"
B_FILL = "#2ca02c"
CELL = 24
MARGIN = 20


def _fmt(v: float) -> str:
    return f"{v:.1f}".rstrip("0").rstrip(".")


def render_svg(words, shade: bool = True, chain: bool = False, cell: int = CELL) -> str:
    """SVG of up to two two-letter words of equal content.

    The first path is black and the second red; A = conv(alpha) and
    B = conv(beta) of the first word are shaded.  With ``chain`` the
    boxes between consecutive vertex-chain points are drawn in grey.
    """
    words = list(words)
    if not 1 <= len(words) <= 2:
        raise ValueError("plot takes one or two words")
    for w in words:
        if w.m != 2:
            raise ValueError("only two-letter words can be plotted")
    c = content(words[0])
    if any(content(w) != c for w in words):
        raise ValueError("plotted words must have the same content")
    la, lb = c
    width = la * cell + 2 * MARGIN
    height = lb * cell + 2 * MARGIN

    def X(x):
        return _fmt(MARGIN + x * cell)

    def Y(y):
        return _fmt(height - MARGIN - y * cell)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    out.append('<g stroke="#dddddd" stroke-width="1">')
    for x in range(la + 1):
        out.append(f'<line x1="{X(x)}" y1="{Y(0)}" x2="{X(x)}" y2="{Y(lb)}"/>')
    for y in range(lb + 1):
        out.append(f'<line x1="{X(0)}" y1="{Y(y)}" x2="{X(la)}" y2="{Y(y)}"/>')
    out.append("</g>")

    if la and lb:
        A, B = _degree_one_polygons(words[0])
        if chain:
            ch = vertex_chain(A, B, c)
            out.append('<g fill="#bbbbbb" fill-opacity="0.35" stroke="#888888">')
            for (x0, y0), (x1, y1) in zip(ch.points, ch.points[1:]):
                out.append(
                    f'<rect x="{X(x0)}" y="{Y(y1)}" width="{_fmt((x1 - x0) * cell)}" '
                    f'height="{_fmt((y1 - y0) * cell)}"/>'
                )
            out.append("</g>")
        if shade:
            for poly, colour, name in ((A, A_FILL, "A"), (B, B_FILL, "B")):
                pts = " ".join(f"{X(x)},{Y(y)}" for x, y in _ccw(poly.vertices))
                out.append(
                    f'<polygon class="{name}" points="{pts}" fill="{colour}" fill-opacity="0.3" '
                    f'stroke="{colour}" stroke-width="2"/>'
                )

    for w, colour in zip(words, PATH_COLOURS):
        pts = " ".join(f"{X(x)},{Y(y)}" for x, y in path(w))
        out.append(
            f'<polyline points="{pts}" fill="none" stroke="{colour}" stroke-width="3" '
            f'stroke-linejoin="round"><title>{w}</title></polyline>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _ccw(vertices):
    """Polygon vertices in counter-clockwise order (segments and points pass through)."""
    pts = sorted(vertices)
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]
