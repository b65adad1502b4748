"""Exhaustive property sweep over all small arcs and modules.

Each check yields ``(label, ok)`` pairs in a fixed order; the runner keeps
counts and the first failing label, so results are independent of timing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from . import intersections as ix
from . import oracle, quiver, tube
from .arcs import annulus_arcs, canonical_lift, make_arc_ann, shift, tau_arc

N_LIMIT = 8
LEN_LIMIT = 32
INFINITY_RANGE = (-8, 8)


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def as_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "counterexample": self.counterexample,
        }


def _pair_label(n, x, y):
    return f"n={n} alpha=[{x.a},{x.b}] beta=[{y.a},{y.b}]"


def _pairs(n_max, len_max):
    for n in range(1, n_max + 1):
        arcs = annulus_arcs(n, len_max)
        for x in arcs:
            for y in arcs:
                yield n, x, y


def check_anchor(n_max, len_max) -> Iterator:
    """Crossing numbers and Ext dimensions of pi_4[0,26] and pi_4[3,17]."""
    n = 4
    x, y = make_arc_ann(4, 0, 26), make_arc_ann(4, 3, 17)
    m1, m2 = tube.phi(x), tube.phi(y)
    label = _pair_label(n, x, y)
    yield label, ix.cover_count(n, x, y).counts == (3, 4, 7)
    yield label, ix.itotal(n, x, y).counts == (3, 4, 7)
    yield label, tube.ext_dim_tube(m1, m2) == 4 and tube.ext_dim_tube(m2, m1) == 3
    yield label, tube.ext_dim_cluster(m1, m2) == 7
    yield label, oracle.ext_dim_ar(m1, m2) == 4 and oracle.ext_dim_ar(m2, m1) == 3


def check_cycle_powers(n_max, len_max) -> Iterator:
    """Powers c^r, c^s of the loop at 0: (min-1, min-1, 2 min - 2)."""
    for n in range(1, 5):
        for r in range(1, 7):
            for s in range(1, 7):
                if r * n < 2 or s * n < 2:
                    continue  # c^1 in A(1) is a boundary arc
                x, y = make_arc_ann(n, 0, r * n), make_arc_ann(n, 0, s * n)
                k = min(r, s) - 1
                yield _pair_label(n, x, y), ix.itotal(n, x, y).counts == (k, k, 2 * k)


def check_route_agreement(n_max, len_max) -> Iterator:
    for n, x, y in _pairs(n_max, len_max):
        geo = ix.cover_count(n, x, y)
        yield _pair_label(n, x, y), geo.counts == ix.itotal(n, x, y).counts and geo.total == geo.pos + geo.neg


def check_swap(n_max, len_max) -> Iterator:
    for n, x, y in _pairs(n_max, len_max):
        ok = ix.ipos(n, x, y) == ix.ineg(n, y, x) and ix.itotal(n, x, y).total == ix.itotal(n, y, x).total
        yield _pair_label(n, x, y), ok


def check_tau_invariance(n_max, len_max) -> Iterator:
    for n, x, y in _pairs(n_max, len_max):
        tx, ty = tau_arc(x), tau_arc(y)
        ok = ix.ipos(n, tx, ty) == ix.ipos(n, x, y) and ix.ineg(n, tx, ty) == ix.ineg(n, x, y)
        yield _pair_label(n, x, y), ok


def check_strip_sums(n_max, len_max) -> Iterator:
    """Annulus counts equal sums of strip counts over translates, for shifted lifts too."""
    for n, x, y in _pairs(n_max, len_max):
        want = ix.itotal(n, x, y).counts
        ok = True
        for k in (-1, 0, 2):
            lx = shift(canonical_lift(x), k, n)
            ly = canonical_lift(y)
            m_lo = (lx.a - ly.b) // n - 1
            m_hi = (lx.b - ly.a) // n + 1
            p = q = 0
            for m in range(m_lo, m_hi + 1):
                r = ix.strip_total(lx, shift(ly, m, n))
                p += r.pos
                q += r.neg
            ok = ok and (p, q, p + q) == want
        yield _pair_label(n, x, y), ok


def check_doubling(n_max, len_max) -> Iterator:
    for n, x, y in _pairs(n_max, len_max):
        d = ix.doubled_intersections(n, x, y)
        r = ix.itotal(n, x, y)
        yield _pair_label(n, x, y), d.counts == tuple(2 * v for v in r.counts)


def check_oracle(n_max, len_max) -> Iterator:
    """Ext^1 three ways and Hom two ways, plus the cluster-tube total."""
    for n, x, y in _pairs(n_max, len_max):
        m1, m2 = tube.phi(x), tube.phi(y)
        e = tube.ext_dim_tube(m1, m2)
        ok = e == oracle.ext_dim_ar(m1, m2) == oracle.ext_dim_euler(m1, m2)
        ok = ok and e == tube.ext_dim_tube_via_ipos(m1, m2)
        ok = ok and tube.hom_dim(m1, m2) == oracle.hom_dim_linalg(oracle.build_rep(m1), oracle.build_rep(m2))
        ok = ok and tube.ext_dim_cluster(m1, m2) == ix.itotal(n, x, y).total
        yield _pair_label(n, x, y), ok


def check_module_shifts(n_max, len_max) -> Iterator:
    """Hom and Ext^1 unchanged when a label is shifted by n, and tau-equivariance."""
    for n, x, y in _pairs(n_max, len_max):
        m1, m2 = tube.phi(x), tube.phi(y)
        shifted = oracle.rep_from_interval(n, m1.a + n, m1.b + n)
        ok = oracle.hom_dim_linalg(shifted, oracle.build_rep(m2)) == tube.hom_dim(m1, m2)
        ok = ok and tube.make_module(n, m1.a + n, m1.b + n) == m1
        t1, t2 = tube.tau_module(m1), tube.tau_module(m2)
        ok = ok and tube.ext_dim_tube(t1, t2) == tube.ext_dim_tube(m1, m2)
        yield _pair_label(n, x, y), ok


def check_quiver(n_max, len_max) -> Iterator:
    for n in range(1, n_max + 1):
        q = quiver.generate_window(n, len_max)
        label = f"n={n} max_len={len_max}"
        yield label, len(q.vertices) == n * (len_max - 1)
        yield label, not quiver.mesh_defects(q)
        degrees_ok = True
        for v in q.vertices:
            if not q.is_interior(v):
                continue
            want = 1 if v.length == 2 else 2
            degrees_ok = degrees_ok and q.out_degree(v) == want
        yield label, degrees_ok
        orbit_ok = True
        for v in q.vertices:
            w = v
            for _ in range(n):
                w = q.tau[w]
            orbit_ok = orbit_ok and w == v and q.tau[v].length == v.length
        yield label, orbit_ok


def check_infinity(n_max, len_max) -> Iterator:
    lo, hi = INFINITY_RANGE
    mods = [tube.make_module(None, a, b) for a in range(lo, hi + 1) for b in range(a + 2, hi + 1)]
    for m1 in mods:
        for m2 in mods:
            e = tube.ext_dim_infinity(m1, m2)
            c = tube.ext_dim_infinity(m1, m2, cluster=True)
            o = oracle.ext_dim_line(m1, m2)
            oc = o + oracle.ext_dim_line(m2, m1)
            ok = e == o and c == oc and e in (0, 1) and c in (0, 1, 2)
            yield f"X[{m1.a},{m1.b}] X[{m2.a},{m2.b}]", ok


CHECKS: list = [
    ("anchor-pair", check_anchor),
    ("cycle-powers", check_cycle_powers),
    ("route-agreement", check_route_agreement),
    ("swap-antisymmetry", check_swap),
    ("tau-invariance", check_tau_invariance),
    ("strip-sums", check_strip_sums),
    ("doubling", check_doubling),
    ("oracle-agreement", check_oracle),
    ("module-shifts", check_module_shifts),
    ("quiver-mesh", check_quiver),
    ("infinity", check_infinity),
]


def validate_bounds(n_max: int, len_max: int):
    if not 1 <= n_max <= N_LIMIT:
        raise ValueError(f"n_max must be in [1, {N_LIMIT}], got {n_max}")
    if not 2 <= len_max <= LEN_LIMIT:
        raise ValueError(f"len_max must be in [2, {LEN_LIMIT}], got {len_max}")


def run_checks(n_max: int, len_max: int, only=None, on_result: Optional[Callable] = None) -> list:
    validate_bounds(n_max, len_max)
    results = []
    for name, fn in CHECKS:
        if only is not None and name not in only:
            continue
        res = CheckResult(name)
        for label, ok in fn(n_max, len_max):
            if ok:
                res.passed += 1
            else:
                res.failed += 1
                if res.counterexample is None:
                    res.counterexample = label
        results.append(res)
        if on_result is not None:
            on_result(res)
    return results
