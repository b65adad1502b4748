import pytest
from hypothesis import given
from hypothesis import strategies as st

from tubearcs.arcs import (
    ArcAnn,
    ArcU,
    annulus_arcs,
    canonical_lift,
    combinatorial_length,
    make_arc_u,
    project,
    shift,
    tau_arc,
    tau_inv_arc,
    winding_number,
)
from tubearcs.errors import NotAdmissible

ranks = st.integers(1, 9)


@st.composite
def strip_arcs(draw):
    a = draw(st.integers(-40, 40))
    return ArcU(a, a + draw(st.integers(2, 40)))


@st.composite
def annulus_arc(draw, n=None):
    n = n if n is not None else draw(ranks)
    return ArcAnn(n, draw(st.integers(0, n - 1)), draw(st.integers(2, 4 * n + 2)))


def test_make_arc_u():
    assert make_arc_u(2, 24) == ArcU(2, 24)
    assert make_arc_u(0, 2) == ArcU(0, 2)


@pytest.mark.parametrize("a,b", [(0, 1), (3, 3), (5, 2), (-1, 0)])
def test_make_arc_u_rejects(a, b):
    with pytest.raises(NotAdmissible):
        make_arc_u(a, b)


@pytest.mark.parametrize(
    "arc,m,n,want",
    [((2, 24), 1, 8, (10, 32)), ((2, 24), 0, 8, (2, 24)), ((0, 5), -1, 5, (-5, 0))],
)
def test_shift(arc, m, n, want):
    assert shift(ArcU(*arc), m, n) == ArcU(*want)


@pytest.mark.parametrize(
    "arc,n,want",
    [((10, 32), 8, (8, 2, 22)), ((2, 24), 8, (8, 2, 22)), ((-5, 0), 5, (5, 0, 5))],
)
def test_project(arc, n, want):
    assert project(ArcU(*arc), n) == ArcAnn(*want)


@pytest.mark.parametrize(
    "arc,want", [((8, 2, 22), (2, 24)), ((5, 0, 2), (0, 2)), ((4, 3, 14), (3, 17))]
)
def test_canonical_lift(arc, want):
    assert canonical_lift(ArcAnn(*arc)) == ArcU(*want)


def test_winding_number():
    assert winding_number(ArcAnn(8, 2, 22)) == 2
    assert winding_number(ArcAnn(5, 0, 2)) == 0
    assert winding_number(ArcAnn(4, 0, 26)) == 6


def test_combinatorial_length():
    assert [combinatorial_length(ArcU(*p)) for p in [(2, 24), (0, 2), (3, 17)]] == [22, 2, 14]


def test_tau_arc():
    assert tau_arc(ArcAnn(5, 0, 5)) == ArcAnn(5, 4, 5)
    assert tau_arc(ArcAnn(5, 3, 4)) == ArcAnn(5, 2, 4)


def test_arcann_validation():
    with pytest.raises(ValueError):
        ArcAnn(4, 4, 3)
    with pytest.raises(NotAdmissible):
        ArcAnn(4, 0, 1)
    with pytest.raises(ValueError):
        ArcAnn(0, 0, 2)


def test_annulus_arcs_count():
    assert len(annulus_arcs(5, 5)) == 20
    assert len(set(annulus_arcs(3, 9))) == 3 * 8


@given(strip_arcs(), ranks, st.integers(-5, 5), st.integers(-5, 5))
def test_shift_composition(x, n, m, k):
    assert shift(shift(x, m, n), k, n) == shift(x, m + k, n)


@given(strip_arcs(), ranks, st.integers(-5, 5))
def test_project_shift_invariant(x, n, m):
    assert project(shift(x, m, n), n) == project(x, n)


@given(annulus_arc(), st.integers(-6, 6))
def test_lifts_are_translates_of_canonical(y, m):
    x = shift(canonical_lift(y), m, y.n)
    assert project(canonical_lift(y), y.n) == y
    found = [k for k in range(-10, 11) if shift(canonical_lift(y), k, y.n) == x]
    assert found == [m]


@given(annulus_arc())
def test_tau_bijective_of_order_n(y):
    assert tau_inv_arc(tau_arc(y)) == y
    assert winding_number(tau_arc(y)) == winding_number(y)
    z = y
    for _ in range(y.n):
        z = tau_arc(z)
    assert z == y
    row = annulus_arcs(y.n, y.length)[-y.n:]
    assert sorted(map(tau_arc, row), key=lambda v: v.a) == row
