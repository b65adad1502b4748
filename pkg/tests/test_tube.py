import pytest
from hypothesis import given
from hypothesis import strategies as st

from brute import composition_factors
from tubearcs.arcs import ArcAnn, ArcU, make_arc_ann
from tubearcs.errors import NotAdmissible, RankMismatch
from tubearcs.tube import (
    IndecModule,
    composition_series,
    ext_dim_cluster,
    ext_dim_infinity,
    ext_dim_tube,
    ext_dim_tube_via_ipos,
    hom_dim,
    make_module,
    phi,
    phi_inv,
    strip_arc,
    tau_module,
    tube_modules,
)


@st.composite
def module_pair(draw, max_n=6):
    n = draw(st.integers(1, max_n))

    def one():
        a = draw(st.integers(0, n - 1))
        return make_module(n, a, a + draw(st.integers(2, 3 * n + 2)))

    return one(), one()


def test_make_module_normalizes():
    assert make_module(4, 5, 9) == IndecModule(4, 1, 5)
    assert make_module(4, -1, 3) == IndecModule(4, 3, 7)
    assert make_module(None, -5, -2) == IndecModule(None, -5, -2)
    with pytest.raises(NotAdmissible):
        make_module(4, 2, 3)
    with pytest.raises(ValueError):
        IndecModule(4, 4, 7)


def test_labels_and_length():
    assert str(make_module(4, 0, 26)) == "M[0,26]"
    assert str(make_module(None, 0, 3)) == "X[0,3]"
    assert make_module(4, 0, 26).length == 25


def test_composition_series_anchor_module():
    series = [s.index for s in composition_series(make_module(4, 3, 17))]
    assert series == composition_factors(4, 3, 17)
    assert series[:5] == [0, 1, 2, 3, 0]
    assert [s.index for s in composition_series(make_module(None, -2, 2))] == [-1, 0, 1]


def test_phi_roundtrip():
    x = make_arc_ann(4, 3, 17)
    assert phi(x) == IndecModule(4, 3, 17)
    assert phi_inv(phi(x)) == x
    assert strip_arc(make_module(None, 1, 4)) == ArcU(1, 4)
    with pytest.raises(ValueError):
        phi_inv(make_module(None, 1, 4))


def test_tau_module():
    assert tau_module(make_module(5, 0, 5)) == IndecModule(5, 4, 9)
    assert tau_module(make_module(None, 0, 5)) == IndecModule(None, -1, 4)


def test_anchor_ext():
    m1, m2 = make_module(4, 0, 26), make_module(4, 3, 17)
    assert ext_dim_tube(m1, m2) == 4
    assert ext_dim_tube(m2, m1) == 3
    assert ext_dim_cluster(m1, m2) == ext_dim_cluster(m2, m1) == 7


# Hom values frozen from the linear-algebra oracle
@pytest.mark.parametrize(
    "n,m1,m2,want",
    [
        (4, (0, 26), (3, 17), 3),
        (4, (3, 17), (0, 26), 3),
        (3, (0, 3), (0, 3), 1),
        (1, (0, 4), (0, 4), 3),
        (5, (0, 3), (1, 4), 1),
        (5, (1, 4), (0, 3), 0),
    ],
)
def test_hom_examples(n, m1, m2, want):
    from tubearcs.oracle import build_rep, hom_dim_linalg

    a, b = make_module(n, *m1), make_module(n, *m2)
    assert hom_dim_linalg(build_rep(a), build_rep(b)) == want
    assert hom_dim(a, b) == want


def test_infinity_examples():
    X = lambda a, b: make_module(None, a, b)  # noqa: E731
    assert ext_dim_infinity(X(0, 3), X(1, 5)) == 0
    assert ext_dim_infinity(X(1, 5), X(0, 3)) == 1
    assert ext_dim_infinity(X(0, 3), X(1, 5), cluster=True) == 1
    assert ext_dim_infinity(X(0, 5), X(1, 4), cluster=True) == 0
    assert hom_dim(X(0, 3), X(1, 5)) == 1
    with pytest.raises(RankMismatch):
        ext_dim_infinity(make_module(3, 0, 3), make_module(3, 0, 3))


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        ext_dim_tube(make_module(3, 0, 3), make_module(4, 0, 3))
    with pytest.raises(RankMismatch):
        hom_dim(make_module(3, 0, 3), make_module(None, 0, 3))


def test_tube_modules():
    mods = tube_modules(3, 4)
    assert len(mods) == 9
    assert mods[0] == IndecModule(3, 0, 2) and mods[-1] == IndecModule(3, 2, 6)


@given(module_pair())
def test_ext_two_routes_and_cluster_symmetry(pair):
    m1, m2 = pair
    assert ext_dim_tube(m1, m2) == ext_dim_tube_via_ipos(m1, m2)
    assert ext_dim_cluster(m1, m2) == ext_dim_cluster(m2, m1)


@given(module_pair())
def test_tau_equivariance(pair):
    m1, m2 = pair
    t1, t2 = tau_module(m1), tau_module(m2)
    assert ext_dim_tube(t1, t2) == ext_dim_tube(m1, m2)
    assert hom_dim(t1, t2) == hom_dim(m1, m2)


@given(module_pair())
def test_ar_formula_in_tube(pair):
    # Ext^1(X, Y) = dim Hom(Y, tau X)
    m1, m2 = pair
    assert ext_dim_tube(m1, m2) == hom_dim(m2, tau_module(m1))


@given(st.integers(-10, 10), st.integers(2, 8), st.integers(-10, 10), st.integers(2, 8))
def test_infinity_bounds(a, la, c, lc):
    m1, m2 = make_module(None, a, a + la), make_module(None, c, c + lc)
    assert ext_dim_infinity(m1, m2) in (0, 1)
    assert ext_dim_infinity(m1, m2, cluster=True) == ext_dim_infinity(m1, m2) + ext_dim_infinity(m2, m1)
