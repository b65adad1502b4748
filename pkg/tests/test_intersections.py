from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brute import annulus_counts
from tubearcs.arcs import ArcAnn, ArcU, annulus_arcs, canonical_lift, make_arc_ann, tau_arc
from tubearcs.errors import RankMismatch
from tubearcs.intersections import (
    CrossingPoint,
    CrossingReport,
    DoubledArcPair,
    PLArc,
    cover_count,
    double_arc,
    doubled_intersections,
    ineg,
    ipos,
    itotal,
    pl_realization,
    strip_cover_count,
    strip_ineg,
    strip_ipos,
    strip_total,
)


def arc(n, a, b):
    return make_arc_ann(n, a, b)


@st.composite
def arc_pair(draw, max_n=7):
    n = draw(st.integers(1, max_n))

    def one():
        return ArcAnn(n, draw(st.integers(0, n - 1)), draw(st.integers(2, 3 * n + 3)))

    return n, one(), one()


# enumeration-frozen values; see tests/brute.py
@pytest.mark.parametrize(
    "n,x,y,pos,neg",
    [
        (4, (0, 26), (3, 17), 3, 4),
        (6, (0, 2), (3, 5), 0, 0),
        (3, (0, 6), (0, 9), 1, 1),
        (5, (0, 5), (3, 8), 1, 1),
        (1, (0, 2), (0, 2), 1, 1),
    ],
)
def test_closed_form_examples(n, x, y, pos, neg):
    assert annulus_counts(n, x, y) == (pos, neg)
    assert ipos(n, arc(n, *x), arc(n, *y)) == pos
    assert ineg(n, arc(n, *x), arc(n, *y)) == neg
    assert itotal(n, arc(n, *x), arc(n, *y)) == CrossingReport(pos, neg, pos + neg)


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        ipos(4, arc(4, 0, 3), arc(5, 0, 3))
    with pytest.raises(RankMismatch):
        itotal(5, arc(4, 0, 3), arc(4, 0, 3))


def test_report_invariants():
    with pytest.raises(ValueError):
        CrossingReport(1, 1, 3)
    pt = CrossingPoint(Fraction(1), Fraction(1, 2), 1, 0)
    with pytest.raises(ValueError):
        CrossingReport(0, 1, 1, (pt,))


@given(arc_pair())
def test_closed_form_matches_enumeration(case):
    n, x, y = case
    lx, ly = canonical_lift(x), canonical_lift(y)
    assert (ipos(n, x, y), ineg(n, x, y)) == annulus_counts(n, (lx.a, lx.b), (ly.a, ly.b))


@given(arc_pair())
def test_swap_and_tau(case):
    n, x, y = case
    assert ipos(n, x, y) == ineg(n, y, x)
    assert itotal(n, x, y).total == itotal(n, y, x).total
    assert ipos(n, tau_arc(x), tau_arc(y)) == ipos(n, x, y)
    assert ineg(n, tau_arc(x), tau_arc(y)) == ineg(n, x, y)


def test_equal_length_order_independent():
    for n in range(1, 6):
        for ln in range(2, 3 * n + 1):
            for a in range(n):
                for c in range(n):
                    x, y = ArcAnn(n, a, ln), ArcAnn(n, c, ln)
                    want = annulus_counts(n, (a, a + ln), (c, c + ln))
                    assert (ipos(n, x, y), ineg(n, x, y)) == want
                    # the reversed ordering of the formula must agree on ties
                    rev = annulus_counts(n, (c, c + ln), (a, a + ln))
                    assert want == (rev[1], rev[0])


def test_cycle_power_table():
    for n in range(1, 5):
        for r in range(1, 7):
            for s in range(1, 7):
                if r * n < 2 or s * n < 2:
                    continue
                k = min(r, s) - 1
                assert itotal(n, arc(n, 0, r * n), arc(n, 0, s * n)).counts == (k, k, 2 * k)


def test_pl_realization_anchor():
    gamma, delta = pl_realization(4, arc(4, 3, 17), arc(4, 0, 26), Fraction(1, 2))
    assert delta.vertices[1] == (Fraction(13), Fraction(1, 2))
    assert gamma.vertices[0] == (3, 0) and gamma.vertices[-1] == (17, 0)
    assert 0 < gamma.vertices[1][1] <= Fraction(1, 2)


def test_pl_realization_short_self_pair():
    gamma, delta = pl_realization(5, arc(5, 0, 2), arc(5, 0, 2), Fraction(1, 2))
    assert delta.vertices[1][1] == Fraction(1, 2)
    assert gamma.vertices[1] == (Fraction(1), Fraction(1, 7))
    assert cover_count(5, arc(5, 0, 2), arc(5, 0, 2)).counts == (0, 0, 0)


def test_pl_realization_rejects_wrong_order():
    with pytest.raises(ValueError):
        pl_realization(4, arc(4, 0, 26), arc(4, 3, 17))
    with pytest.raises(ValueError):
        pl_realization(4, arc(4, 0, 3), arc(4, 0, 5), h=1)


def test_plarc_validation():
    with pytest.raises(ValueError):
        PLArc(((Fraction(0), Fraction(0)),))
    with pytest.raises(ValueError):
        PLArc(((Fraction(0), Fraction(0)), (Fraction(1), Fraction(1)), (Fraction(2), Fraction(0))))
    with pytest.raises(ValueError):
        PLArc(((Fraction(1, 2), Fraction(0)), (Fraction(1), Fraction(1, 2)), (Fraction(2), Fraction(0))))


def test_cover_count_anchor_points():
    rep = cover_count(4, arc(4, 0, 26), arc(4, 3, 17), with_points=True)
    assert rep.counts == (3, 4, 7)
    assert len(rep.points) == 7
    assert sum(p.sign > 0 for p in rep.points) == 3
    assert all(0 < p.y < 1 for p in rep.points)
    assert all(isinstance(p.x, Fraction) for p in rep.points)


def test_cover_count_interleaved_and_disjoint():
    assert cover_count(5, arc(5, 1, 3), arc(5, 2, 4)).counts == (1, 0, 1)
    assert cover_count(5, arc(5, 1, 3), arc(5, 3, 5)).counts == (0, 0, 0)


@given(arc_pair(max_n=6))
def test_cover_count_matches_closed_form(case):
    n, x, y = case
    rep = cover_count(n, x, y, with_points=True)
    assert rep.counts == itotal(n, x, y).counts
    assert len(rep.points) == rep.total


def test_strip_examples():
    assert strip_ipos(ArcU(0, 3), ArcU(1, 5)) == 1
    assert strip_ineg(ArcU(0, 3), ArcU(1, 5)) == 0
    assert strip_ipos(ArcU(0, 5), ArcU(1, 4)) == 0 == strip_ineg(ArcU(0, 5), ArcU(1, 4))
    assert strip_ipos(ArcU(0, 2), ArcU(5, 9)) == 0
    assert strip_cover_count(ArcU(0, 3), ArcU(1, 5)).counts == (1, 0, 1)
    assert strip_cover_count(ArcU(0, 5), ArcU(1, 4)).counts == (0, 0, 0)


@given(st.integers(-8, 8), st.integers(2, 9), st.integers(-8, 8), st.integers(2, 9))
def test_strip_geometric_route(a, la, c, lc):
    x, y = ArcU(a, a + la), ArcU(c, c + lc)
    rep = strip_cover_count(x, y, with_points=True)
    assert rep.counts == strip_total(x, y).counts
    assert rep.total <= 2
    assert strip_ipos(x, y) == strip_ineg(y, x)


@given(arc_pair(max_n=5))
def test_strip_sums_equal_annulus(case):
    n, x, y = case
    lx, ly = canonical_lift(x), canonical_lift(y)
    pos = neg = 0
    for m in range(-30, 31):
        moved = ArcU(ly.a + m * n, ly.b + m * n)
        pos += strip_ipos(lx, moved)
        neg += strip_ineg(lx, moved)
    assert (pos, neg) == (ipos(n, x, y), ineg(n, x, y))


def test_double_arc():
    assert tuple(double_arc(arc(4, 0, 26))) == (arc(8, 0, 26), arc(8, 4, 30))
    assert tuple(double_arc(arc(1, 0, 2))) == (arc(2, 0, 2), arc(2, 1, 3))
    with pytest.raises(ValueError):
        DoubledArcPair(arc(8, 0, 26), arc(8, 3, 29))


@pytest.mark.parametrize(
    "n,x,y,want",
    [(4, (0, 26), (3, 17), (6, 8, 14)), (6, (0, 2), (3, 5), (0, 0, 0)), (3, (0, 6), (0, 9), (2, 2, 4))],
)
def test_doubled_examples(n, x, y, want):
    assert doubled_intersections(n, arc(n, *x), arc(n, *y)).counts == want


@given(arc_pair(max_n=5))
def test_doubling_property(case):
    n, x, y = case
    first, second = double_arc(x)
    assert first.length == second.length == x.length
    assert doubled_intersections(n, x, y).counts == tuple(2 * v for v in itotal(n, x, y).counts)


def test_sweep_route_agreement_small():
    for n in range(1, 4):
        arcs = annulus_arcs(n, 3 * n)
        for x in arcs:
            for y in arcs:
                assert cover_count(n, x, y).counts == itotal(n, x, y).counts
