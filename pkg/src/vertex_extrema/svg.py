"""Static SVG diagrams of a polygon, its extremal circles and triangulations."""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .errors import GeometryError
from .extremality import Extremum, analyze
from .polygon import Polygon
from .predicates import circumcenter
from .triangulation import triangulate

SIZE = 1000
MARGIN = 0.05

MAX_COLOR = "#c0392b"
MIN_COLOR = "#2471a3"
PLAIN_COLOR = "#999999"


class _Frame:
    """Maps polygon coordinates into the square viewbox, y pointing up."""

    def __init__(self, P: Polygon):
        xs = [float(p.x) for p in P]
        ys = [float(p.y) for p in P]
        self.x0, self.y0 = min(xs), min(ys)
        span = max(max(xs) - self.x0, max(ys) - self.y0) or 1.0
        inner = SIZE * (1 - 2 * MARGIN)
        self.k = inner / span
        # centre the shorter axis
        self.ox = SIZE * MARGIN + (inner - (max(xs) - self.x0) * self.k) / 2
        self.oy = SIZE * MARGIN + (inner - (max(ys) - self.y0) * self.k) / 2

    def xy(self, x, y) -> tuple[float, float]:
        return (self.ox + (float(x) - self.x0) * self.k,
                SIZE - (self.oy + (float(y) - self.y0) * self.k))


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _circle_element(P: Polygon, frame: _Frame, i: int, color: str, dashed: bool,
                    width: float = 2.0) -> str:
    c = circumcenter(P[i - 1], P[i], P[i + 1])
    r = math.dist((float(c.x), float(c.y)), (float(P[i].x), float(P[i].y))) * frame.k
    cx, cy = frame.xy(c.x, c.y)
    dash = ' stroke-dasharray="12,8"' if dashed else ""
    return (f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" fill="none" '
            f'stroke="{color}" stroke-width="{width}"{dash}/>')


def render_svg(P: Polygon, circles: str = "extremal", triangulation: str | None = None) -> str:
    """SVG 1.1 document for ``P``.

    ``circles`` is ``"extremal"`` (empty circles solid, full circles dashed),
    ``"all"`` (every ``C_i``, non-extremal ones in grey) or ``"none"``.
    ``triangulation`` optionally overlays the ``"delaunay"`` or ``"anti"``
    diagonals.  Global maxima are drawn as filled discs, global minima as
    filled squares and local extrema get an extra ring.
    """
    frame = _Frame(P)
    try:
        report = analyze(P)
    except GeometryError:
        report = None

    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
           f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>']

    if report is not None and circles != "none":
        out.append('<g id="circles">')
        for i, g in enumerate(report.global_labels):
            if g is Extremum.MAX:
                out.append(_circle_element(P, frame, i, MAX_COLOR, dashed=False))
            elif g is Extremum.MIN:
                out.append(_circle_element(P, frame, i, MIN_COLOR, dashed=True))
            elif circles == "all":
                out.append(_circle_element(P, frame, i, PLAIN_COLOR, dashed=False, width=1.0))
        out.append("</g>")

    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (frame.xy(p.x, p.y) for p in P))
    out.append(f'<polygon id="outline" points="{pts}" fill="#f4f4f4" stroke="black" stroke-width="3"/>')

    if triangulation:
        T = triangulate(P, triangulation)
        out.append(f'<g id="triangulation" class="{T.kind.value}">')
        for i, j in sorted(T.diagonals):
            (x1, y1), (x2, y2) = frame.xy(P[i].x, P[i].y), frame.xy(P[j].x, P[j].y)
            out.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                       f'stroke="#555555" stroke-width="1.5" stroke-dasharray="4,4"/>')
        out.append("</g>")

    out.append('<g id="vertices" font-family="sans-serif" font-size="24">')
    for i, p in enumerate(P):
        x, y = frame.xy(p.x, p.y)
        g = report.global_labels[i] if report else Extremum.NONE
        loc = report.local_labels[i] if report else Extremum.NONE
        if g is Extremum.MAX:
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="9" fill="{MAX_COLOR}"/>')
        elif g is Extremum.MIN:
            out.append(f'<rect x="{_fmt(x - 8)}" y="{_fmt(y - 8)}" width="16" height="16" '
                       f'fill="{MIN_COLOR}"/>')
        else:
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="5" fill="black"/>')
        if loc is not Extremum.NONE:
            color = MAX_COLOR if loc is Extremum.MAX else MIN_COLOR
            out.append(f'<circle class="local-{loc.value}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="16" '
                       f'fill="none" stroke="{color}" stroke-width="2.5"/>')
        out.append(f'<text x="{_fmt(x + 18)}" y="{_fmt(y - 18)}">{escape(str(i))}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
