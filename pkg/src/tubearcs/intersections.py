"""Signed crossing numbers of admissible arcs.

Two independent routes are provided for arcs in A(n):

* closed form: count translates of the longer arc's start (positive) or end
  (negative) strictly inside the shorter arc's span;
* geometric: build explicit piecewise-linear representatives in the strip and
  count transversal crossings of one against every deck translate of the other,
  in exact rational arithmetic.

Sign convention: a crossing of ``alpha`` with ``beta`` is positive when the
ordered tangent pair (alpha', beta') is positively oriented in the plane.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arcs import ArcAnn, ArcU, canonical_lift, lift_at, project
from .errors import RankMismatch

__all__ = [
    "CrossingPoint",
    "CrossingReport",
    "PLArc",
    "DoubledArcPair",
    "ipos",
    "ineg",
    "itotal",
    "pl_realization",
    "cover_count",
    "strip_ipos",
    "strip_ineg",
    "strip_total",
    "strip_cover_count",
    "double_arc",
    "doubled_intersections",
]

DEFAULT_HEIGHT = Fraction(1, 2)


@dataclass(frozen=True)
class CrossingPoint:
    x: Fraction
    y: Fraction
    sign: int
    shift_m: int

    def as_dict(self):
        return {
            "x": [self.x.numerator, self.x.denominator],
            "y": [self.y.numerator, self.y.denominator],
            "sign": self.sign,
            "shift_m": self.shift_m,
        }


@dataclass(frozen=True)
class CrossingReport:
    pos: int
    neg: int
    total: int
    points: Optional[tuple] = None

    def __post_init__(self):
        if self.total != self.pos + self.neg:
            raise ValueError("total must equal pos + neg")
        if self.points is not None:
            npos = sum(1 for p in self.points if p.sign > 0)
            if npos != self.pos or len(self.points) - npos != self.neg:
                raise ValueError("crossing points disagree with signed counts")

    @property
    def counts(self):
        return (self.pos, self.neg, self.total)

    def as_dict(self, with_points=False):
        out = {"pos": self.pos, "neg": self.neg, "total": self.total}
        if with_points and self.points is not None:
            out["points"] = [p.as_dict() for p in self.points]
        return out


@dataclass(frozen=True)
class PLArc:
    """Polyline in the strip, oriented along ``vertices``."""

    vertices: tuple

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 2:
            raise ValueError("a PL arc needs at least two vertices")
        for end in (vs[0], vs[-1]):
            if end[1] != 0 or Fraction(end[0]).denominator != 1:
                raise ValueError("PL arc must start and end at marked points")
        for v in vs[1:-1]:
            if not 0 < v[1] < 1:
                raise ValueError("interior vertices must lie in the open strip")
        for p, q in zip(vs, vs[1:]):
            if p == q:
                raise ValueError("degenerate segment")

    def segments(self):
        return list(zip(self.vertices, self.vertices[1:]))

    def translated(self, dx):
        return PLArc(tuple((x + dx, y) for x, y in self.vertices))

    @property
    def x_extent(self):
        xs = [v[0] for v in self.vertices]
        return min(xs), max(xs)


@dataclass(frozen=True)
class DoubledArcPair:
    first: ArcAnn
    second: ArcAnn

    def __post_init__(self):
        f, s = self.first, self.second
        if f.n != s.n or f.n % 2 or f.length != s.length or (f.a + f.n // 2) % f.n != s.a:
            raise ValueError("second arc must be the first rotated by half a turn")

    def __iter__(self):
        return iter((self.first, self.second))


def _check_rank(alpha: ArcAnn, beta: ArcAnn, n: Optional[int] = None) -> int:
    if alpha.n != beta.n:
        raise RankMismatch(alpha.n, beta.n)
    if n is not None and n != alpha.n:
        raise RankMismatch(n, alpha.n)
    return alpha.n


def _needs_swap(alpha, beta) -> bool:
    # closed forms assume len(beta) >= len(alpha); ties broken on (len, start)
    return (beta.length, beta.a) < (alpha.length, alpha.a)


def _count_congruent(lo: int, hi: int, r: int, n: int) -> int:
    """Number of integers t with lo < t < hi and t = r (mod n)."""
    if hi - lo < 2:
        return 0
    return (hi - 1 - r) // n - (lo - r) // n


def _ipos_ordered(alpha: ArcAnn, beta: ArcAnn) -> int:
    a, b = alpha.a, alpha.b
    return _count_congruent(a, b, beta.a, alpha.n)


def _ineg_ordered(alpha: ArcAnn, beta: ArcAnn) -> int:
    a, b = alpha.a, alpha.b
    return _count_congruent(a, b, beta.b, alpha.n)


def ipos(n: int, alpha: ArcAnn, beta: ArcAnn) -> int:
    """Minimal number of positive crossings of ``alpha`` with ``beta`` in A(n)."""
    _check_rank(alpha, beta, n)
    if _needs_swap(alpha, beta):
        return _ineg_ordered(beta, alpha)
    return _ipos_ordered(alpha, beta)


def ineg(n: int, alpha: ArcAnn, beta: ArcAnn) -> int:
    """Minimal number of negative crossings of ``alpha`` with ``beta`` in A(n)."""
    _check_rank(alpha, beta, n)
    if _needs_swap(alpha, beta):
        return _ipos_ordered(beta, alpha)
    return _ineg_ordered(alpha, beta)


def itotal(n: int, alpha: ArcAnn, beta: ArcAnn) -> CrossingReport:
    p = ipos(n, alpha, beta)
    q = ineg(n, alpha, beta)
    return CrossingReport(p, q, p + q)


# -- geometric route ---------------------------------------------------------


def _line_meet(p, q, r, s):
    """Intersection of the lines through segments pq and rs (not parallel)."""
    d1 = (q[0] - p[0], q[1] - p[1])
    d2 = (s[0] - r[0], s[1] - r[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if den == 0:
        raise ArithmeticError("parallel construction lines")
    t = ((r[0] - p[0]) * d2[1] - (r[1] - p[1]) * d2[0]) / den
    return (p[0] + t * d1[0], p[1] + t * d1[1])


def pl_realization(n: int, alpha: ArcAnn, beta: ArcAnn, h=DEFAULT_HEIGHT):
    """Explicit two-segment representatives (gamma for alpha, delta for beta).

    Requires ``len(beta) >= len(alpha)``.  ``delta`` is the canonical lift
    [c, d] of beta bent at ((c+d)/2, h).  ``gamma`` is the lift [a, b] of alpha
    with c <= a < c + n, bent at the meeting point v of the ray from (a, 0) to
    the midpoint between the tops of delta and its first translate, and the ray
    from (b, 0) to the analogous midpoint for the last translate of delta
    ending left of b.
    """
    _check_rank(alpha, beta, n)
    if beta.length < alpha.length:
        raise ValueError("pl_realization expects len(beta) >= len(alpha)")
    h = Fraction(h)
    if not 0 < h < 1:
        raise ValueError("apex height must lie in (0, 1)")
    c, d = beta.a, beta.b
    lifted = lift_at(alpha, c)
    a, b = lifted.a, lifted.b
    half = Fraction(1, 2)
    apex = (half * (c + d), h)
    delta = PLArc(((Fraction(c), Fraction(0)), apex, (Fraction(d), Fraction(0))))

    y_end = d + ((b - 1 - d) // n) * n  # largest translate end strictly left of b
    m1_top = (half * (c + d + n), h)
    m2_top = (y_end + half * (c - d + n), h)
    start, end = (Fraction(a), Fraction(0)), (Fraction(b), Fraction(0))
    if m1_top == m2_top:
        v = m1_top
    else:
        v = _line_meet(start, m1_top, end, m2_top)
    gamma = PLArc((start, v, end))
    return gamma, delta


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _segment_crossing(p, q, r, s):
    """Exact crossing point of closed segments pq and rs, or None.

    Raises on collinear overlap since the representatives are meant to be in
    general position.
    """
    d1 = (q[0] - p[0], q[1] - p[1])
    d2 = (s[0] - r[0], s[1] - r[1])
    den = _cross(d1, d2)
    w = (r[0] - p[0], r[1] - p[1])
    if den == 0:
        if _cross(w, d1) == 0:
            lo1, hi1 = sorted((p, q))
            lo2, hi2 = sorted((r, s))
            if max(lo1, lo2) < min(hi1, hi2):
                raise ArithmeticError("collinear overlapping segments")
        return None
    t = _cross(w, d2) / den
    u = _cross(w, d1) / den
    if not (0 <= t <= 1 and 0 <= u <= 1):
        return None
    return (p[0] + t * d1[0], p[1] + t * d1[1])


def crossing_sign(first_dir, second_dir) -> int:
    """+1 when (first_dir, second_dir) is a positively oriented basis of the plane."""
    c = _cross(first_dir, second_dir)
    if c == 0:
        raise ArithmeticError("tangent crossing")
    return 1 if c > 0 else -1


def _count_crossings(n: int, gamma: PLArc, delta: PLArc, with_points: bool):
    """Signed crossings of gamma against every translate of delta (open strip).

    Signs are for the ordered pair (gamma, delta).
    """
    g_lo, g_hi = gamma.x_extent
    d_lo, d_hi = delta.x_extent
    m_lo = -((d_hi - g_lo) // n)  # ceil((g_lo - d_hi) / n)
    m_hi = (g_hi - d_lo) // n
    corners = set(gamma.vertices[1:-1])
    pos = neg = 0
    points = []
    for m in range(int(m_lo), int(m_hi) + 1):
        moved = delta.translated(m * n)
        d_corners = set(moved.vertices[1:-1])
        seen = set()
        for p, q in gamma.segments():
            for r, s in moved.segments():
                hit = _segment_crossing(p, q, r, s)
                if hit is None:
                    continue
                pt = hit
                if pt[1] <= 0 or pt in seen:
                    continue
                if pt in corners or pt in d_corners:
                    raise ArithmeticError(f"crossing at a corner {pt}; representatives not transversal")
                seen.add(pt)
                sign = crossing_sign((q[0] - p[0], q[1] - p[1]), (s[0] - r[0], s[1] - r[1]))
                if sign > 0:
                    pos += 1
                else:
                    neg += 1
                if with_points:
                    points.append(CrossingPoint(pt[0], pt[1], sign, m))
    return pos, neg, points


def cover_count(n: int, alpha: ArcAnn, beta: ArcAnn, with_points: bool = False) -> CrossingReport:
    """Crossing numbers counted on explicit lifts in the universal cover."""
    _check_rank(alpha, beta, n)
    swapped = beta.length < alpha.length
    short, long_ = (beta, alpha) if swapped else (alpha, beta)
    gamma, delta = pl_realization(n, short, long_)
    pos, neg, points = _count_crossings(n, gamma, delta, with_points)
    if swapped:
        # the ordered pair is (delta, gamma): every sign flips
        pos, neg = neg, pos
        points = [CrossingPoint(p.x, p.y, -p.sign, p.shift_m) for p in points]
    points = tuple(sorted(points, key=lambda p: (p.x, p.y))) if with_points else None
    return CrossingReport(pos, neg, pos + neg, points)


# -- strip (A-infinity) ------------------------------------------------------


def _strip_ordered(alpha: ArcU, beta: ArcU):
    a, b = alpha.a, alpha.b
    return int(a < beta.a < b), int(a < beta.b < b)


def strip_ipos(alpha: ArcU, beta: ArcU) -> int:
    if beta.length < alpha.length:
        return _strip_ordered(beta, alpha)[1]
    return _strip_ordered(alpha, beta)[0]


def strip_ineg(alpha: ArcU, beta: ArcU) -> int:
    if beta.length < alpha.length:
        return _strip_ordered(beta, alpha)[0]
    return _strip_ordered(alpha, beta)[1]


def strip_total(alpha: ArcU, beta: ArcU) -> CrossingReport:
    p, q = strip_ipos(alpha, beta), strip_ineg(alpha, beta)
    return CrossingReport(p, q, p + q)


def strip_cover_count(alpha: ArcU, beta: ArcU, with_points: bool = False) -> CrossingReport:
    """Geometric strip counts: the annulus construction with a rank so large that
    only the untranslated copy of ``beta`` can meet ``alpha``."""
    lo = min(alpha.a, beta.a)
    hi = max(alpha.b, beta.b)
    big = 2 * (hi - lo) + 2
    shift = -lo  # keep starts reduced without changing relative position
    x = project(ArcU(alpha.a + shift, alpha.b + shift), big)
    y = project(ArcU(beta.a + shift, beta.b + shift), big)
    rep = cover_count(big, x, y, with_points)
    if not with_points:
        return rep
    pts = tuple(CrossingPoint(p.x - shift, p.y, p.sign, 0) for p in rep.points)
    return CrossingReport(rep.pos, rep.neg, rep.total, pts)


# -- doubling ----------------------------------------------------------------


def double_arc(arc: ArcAnn) -> DoubledArcPair:
    """Preimage of an arc of A(n) under the squaring map A(2n) -> A(n)."""
    lift = canonical_lift(arc)
    n = arc.n
    return DoubledArcPair(
        project(lift, 2 * n),
        project(ArcU(lift.a + n, lift.b + n), 2 * n),
    )


def doubled_intersections(n: int, alpha: ArcAnn, beta: ArcAnn) -> CrossingReport:
    _check_rank(alpha, beta, n)
    pos = neg = 0
    for x in double_arc(alpha):
        for y in double_arc(beta):
            r = itotal(2 * n, x, y)
            pos += r.pos
            neg += r.neg
    return CrossingReport(pos, neg, pos + neg)
