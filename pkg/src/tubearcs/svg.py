"""Standalone SVG pictures of arcs in the strip (cover view) or in the annulus.

Geometry comes from the exact piecewise-linear representatives used for
counting; coordinates are turned into decimals (6 places) only here.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .arcs import ArcAnn, canonical_lift
from .intersections import DEFAULT_HEIGHT, PLArc, cover_count, pl_realization

__all__ = ["draw_svg", "STYLE"]

STYLE = {
    "alpha": "#222222",
    "beta": "#2a8a3e",
    "positive": "#d62728",
    "negative": "#1f77b4",
    "boundary": "#888888",
}

UNIT = 40  # pixels per strip unit (cover view)
STRIP_H = 160
MARGIN = 30
ANN_R = 200  # outer radius in pixels
INNER = 0.4  # inner radius relative to outer
CORNER = Fraction(1, 8)  # corner rounding radius in strip units, presentation only


def _f(v) -> str:
    return f"{float(v):.6f}"


def _single_pl(arc: ArcAnn) -> PLArc:
    lift = canonical_lift(arc)
    a, b = Fraction(lift.a), Fraction(lift.b)
    return PLArc(((a, Fraction(0)), ((a + b) / 2, DEFAULT_HEIGHT), (b, Fraction(0))))


def _layout(n, arcs):
    """PL curves to draw as (role, PLArc) pairs plus signed crossing points."""
    if len(arcs) == 1:
        return [("alpha", _single_pl(arcs[0]))], []
    alpha, beta = arcs
    swapped = beta.length < alpha.length
    short, long_ = (beta, alpha) if swapped else (alpha, beta)
    gamma, delta = pl_realization(n, short, long_)
    roles = ("beta", "alpha") if swapped else ("alpha", "beta")
    rep = cover_count(n, alpha, beta, with_points=True)
    curves = [(roles[0], gamma)]
    g_lo, g_hi = gamma.x_extent
    d_lo, d_hi = delta.x_extent
    m_lo = -((d_hi - g_lo) // n)
    m_hi = (g_hi - d_lo) // n
    for m in range(int(m_lo), int(m_hi) + 1):
        curves.append((roles[1], delta.translated(m * n)))
    return curves, list(rep.points)


def _rounded(vs):
    """Vertex list with each interior corner replaced by (before, corner, after)."""
    out = [("M", vs[0])]
    for i in range(1, len(vs) - 1):
        p, c, q = vs[i - 1], vs[i], vs[i + 1]
        before = _toward(c, p)
        after = _toward(c, q)
        out.append(("L", before))
        out.append(("Q", c, after))
    out.append(("L", vs[-1]))
    return out


def _toward(c, p):
    dx, dy = p[0] - c[0], p[1] - c[1]
    length = math.hypot(float(dx), float(dy))
    t = min(float(CORNER) / length, 0.5)
    return (float(c[0]) + t * float(dx), float(c[1]) + t * float(dy))


def _header(width, height):
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]


def _markers(points, proj):
    out = []
    for p in points:
        x, y = proj(p.x, p.y)
        kind = "positive" if p.sign > 0 else "negative"
        out.append(
            f'<circle class="crossing {kind}" cx="{_f(x)}" cy="{_f(y)}" r="4" '
            f'fill="{STYLE[kind]}" stroke="none"/>'
        )
    return out


def _draw_cover(n, curves, points):
    xs = [v[0] for _, c in curves for v in c.vertices]
    x0 = math.floor(min(xs)) - 1
    x1 = math.ceil(max(xs)) + 1
    width = (x1 - x0) * UNIT + 2 * MARGIN
    height = STRIP_H + 2 * MARGIN + 20

    def proj(x, y):
        return MARGIN + (float(x) - x0) * UNIT, MARGIN + (1 - float(y)) * STRIP_H

    out = _header(width, height)
    left, top = proj(x0, 1)
    right, bottom = proj(x1, 0)
    b = STYLE["boundary"]
    out.append(f'<line x1="{_f(left)}" y1="{_f(top)}" x2="{_f(right)}" y2="{_f(top)}" stroke="{b}"/>')
    out.append(f'<line x1="{_f(left)}" y1="{_f(bottom)}" x2="{_f(right)}" y2="{_f(bottom)}" stroke="{b}"/>')
    for k in range(x0, x1 + 1):
        if k % n == 0:
            px, _ = proj(k, 0)
            out.append(
                f'<line x1="{_f(px)}" y1="{_f(top)}" x2="{_f(px)}" y2="{_f(bottom)}" '
                f'stroke="{b}" stroke-dasharray="2,3"/>'
            )
    for role, curve in curves:
        cmds = []
        for item in _rounded(curve.vertices):
            pts = [proj(*pt) for pt in item[1:]]
            cmds.append(item[0] + " " + " ".join(f"{_f(px)},{_f(py)}" for px, py in pts))
        out.append(f'<path class="arc {role}" d="{" ".join(cmds)}" fill="none" stroke="{STYLE[role]}" stroke-width="1.5"/>')
    for k in range(x0, x1 + 1):
        px, py = proj(k, 0)
        out.append(f'<circle class="marked" cx="{_f(px)}" cy="{_f(py)}" r="2.5" fill="black"/>')
        out.append(f'<text x="{_f(px)}" y="{_f(py + 16)}" text-anchor="middle">{k % n}</text>')
    out.extend(_markers(points, proj))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _draw_annulus(n, curves, points):
    size = 2 * (ANN_R + MARGIN)
    cx = cy = ANN_R + MARGIN

    def proj(x, y):
        theta = 2 * math.pi * float(x) / n
        r = ANN_R * (1 - (1 - INNER) * float(y))
        return cx + r * math.cos(theta), cy - r * math.sin(theta)

    out = _header(size, size)
    b = STYLE["boundary"]
    out.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(ANN_R)}" fill="none" stroke="{b}"/>')
    out.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(ANN_R * INNER)}" fill="#eeeeee" stroke="{b}"/>')
    for role, curve in curves:
        pts = []
        for p, q in curve.segments():
            steps = max(8, int(abs(float(q[0] - p[0])) * 24 / n) + 8)
            for i in range(steps):
                t = Fraction(i, steps)
                pts.append(proj(p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
        pts.append(proj(*curve.vertices[-1]))
        d = "M " + " L ".join(f"{_f(x)},{_f(y)}" for x, y in pts)
        out.append(f'<path class="arc {role}" d="{d}" fill="none" stroke="{STYLE[role]}" stroke-width="1.5"/>')
    for k in range(n):
        px, py = proj(k, 0)
        lx, ly = proj(k, Fraction(-1, 10))
        out.append(f'<circle class="marked" cx="{_f(px)}" cy="{_f(py)}" r="3" fill="black"/>')
        out.append(f'<text x="{_f(lx)}" y="{_f(ly + 4)}" text-anchor="middle">{k}</text>')
    out.extend(_markers(points, proj))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def draw_svg(n: int, arcs, view: str = "cover") -> str:
    """SVG text for one or two arcs of A(n).

    In the annulus view only the crossings of one lift with all translates are
    marked, which is one marker per crossing in the annulus.
    """
    arcs = list(arcs)
    if not 1 <= len(arcs) <= 2:
        raise ValueError("draw expects one or two arcs")
    curves, points = _layout(n, arcs)
    if view == "cover":
        return _draw_cover(n, curves, points)
    if view == "annulus":
        # in the annulus every translate of delta is the same curve
        seen = set()
        uniq = []
        for role, c in curves:
            if role not in seen:
                seen.add(role)
                uniq.append((role, c))
        return _draw_annulus(n, uniq, points)
    raise ValueError(f"unknown view {view!r}")
