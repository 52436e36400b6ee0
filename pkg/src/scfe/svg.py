"""Plain SVG pictures of drawings and arc models.

Angle 0 sits at the top and angles grow clockwise.  Coordinates are printed
with fixed precision and elements are emitted in sorted order, so equal
inputs give byte-identical files.
"""

from __future__ import annotations

from fractions import Fraction
from math import cos, pi, sin

from .errors import PreconditionError
from .geometry import ArcModel, Drawing
from .graph import SignedGraph

SIZE = 400
CENTER = SIZE / 2
RADIUS = 150.0


def _xy(angle: Fraction, radius: float, center: float = CENTER) -> tuple[str, str]:
    t = 2 * pi * float(angle)
    return f"{center + radius * sin(t):.3f}", f"{center - radius * cos(t):.3f}"


def _open(extent: float) -> list[str]:
    c = extent / 2
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{extent:.0f}" height="{extent:.0f}" '
        f'viewBox="0 0 {extent:.0f} {extent:.0f}">',
        f'<circle cx="{c:.3f}" cy="{c:.3f}" r="{RADIUS:.3f}" fill="none" stroke="#999"/>',
    ]


def render_drawing(G: SignedGraph, D: Drawing) -> str:
    """Dots with labels on the circle; solid chords for friends, dashed for enemies."""
    D.require_total(G.n)
    out = _open(SIZE)
    chords = [(e, "+") for e in G.pos_edges] + [(e, "-") for e in G.neg_edges]
    for (u, v), s in sorted(chords):
        (x1, y1), (x2, y2) = _xy(D[u], RADIUS), _xy(D[v], RADIUS)
        style = 'stroke="#2a6"' if s == "+" else 'stroke="#c33" stroke-dasharray="5,4"'
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}/>')
    for v, a in sorted(D.positions.items()):
        x, y = _xy(a, RADIUS)
        lx, ly = _xy(a, RADIUS + 16)
        out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="#000"/>')
        out.append(f'<text x="{lx}" y="{ly}" font-size="12" text-anchor="middle" dy="4">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_model(M: ArcModel) -> str:
    """Each arc on its own ring outside the circle; filled end dots mark closed ends."""
    extent = 2 * (RADIUS + 12 * max(M.n, 1) + 30)
    c = extent / 2
    out = _open(extent)
    for ring, (v, arc) in enumerate(sorted(M.arcs.items()), start=1):
        r = RADIUS + 12 * ring
        (x1, y1), (x2, y2) = _xy(arc.start, r, c), _xy(arc.end, r, c)
        large = 1 if arc.length > Fraction(1, 2) else 0
        out.append(f'<path d="M {x1} {y1} A {r:.3f} {r:.3f} 0 {large} 1 {x2} {y2}" fill="none" stroke="#36c"/>')
        for (x, y), closed in (((x1, y1), arc.closed_start), ((x2, y2), arc.closed_end)):
            fill = "#36c" if closed else "#fff"
            out.append(f'<circle cx="{x}" cy="{y}" r="2.5" fill="{fill}" stroke="#36c"/>')
        lx, ly = _xy(arc.start + arc.length / 2, r, c)
        out.append(f'<text x="{lx}" y="{ly}" font-size="9" text-anchor="middle" dy="-3">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(G: SignedGraph, D: Drawing | None = None, M: ArcModel | None = None) -> str:
    """Picture of a drawing of ``G``, or of an arc model when ``M`` is given instead."""
    if (D is None) == (M is None):
        raise PreconditionError("pass exactly one of a drawing or an arc model")
    return render_drawing(G, D) if D is not None else render_model(M)  # type: ignore[arg-type]
