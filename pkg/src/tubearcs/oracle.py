"""Independent ground truth from quiver representations and exact linear algebra.

Finite rank: nilpotent representations of the cyclic quiver with arrows
i -> i - 1 (mod n).  Infinite rank: finite-dimensional representations of the
line quiver with arrows i + 1 -> i.  In both cases the interval module for
[a, b] has basis e_{a+1}, ..., e_{b-1}, e_j sitting at vertex j (mod n), and
each arrow sends e_j to e_{j-1} (zero on e_{a+1}), so its socle is S_{a+1}.

Hom spaces are solution spaces of the intertwiner equations, and Ext^1 is
obtained twice: by Auslander-Reiten duality (dim Hom(Y, tau X)) and from the
Euler form of the hereditary category.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg
from .errors import NegativeExt, RankMismatch
from .tube import IndecModule, tau_module

__all__ = [
    "NilpotentRep",
    "EulerForm",
    "rep_from_interval",
    "build_rep",
    "build_rep_line",
    "hom_dim_linalg",
    "hom_dim_line",
    "euler_form",
    "ext_dim_ar",
    "ext_dim_euler",
    "ext_dim_line",
    "ext_dim_line_euler",
]


def _arrow_target(n, s):
    return (s - 1) % n if n is not None else s - 1


@dataclass(frozen=True)
class NilpotentRep:
    """Representation: ``dims[v]`` and, keyed by source vertex s, the matrix of
    the arrow s -> target(s) with shape (dims[target] x dims[s])."""

    n: Optional[int]
    dims: dict
    maps: dict = field(default_factory=dict)

    def __post_init__(self):
        for s, mat in self.maps.items():
            t = _arrow_target(self.n, s)
            rows, cols = self.dim(t), self.dim(s)
            if len(mat) != rows or any(len(r) != cols for r in mat):
                raise ValueError(f"arrow {s}->{t}: matrix shape does not match dims ({rows}x{cols})")
        if self.n is not None and not self.is_nilpotent():
            raise ValueError("cycle composite is not nilpotent")

    def dim(self, v) -> int:
        return self.dims.get(v, 0)

    def arrow(self, s):
        t = _arrow_target(self.n, s)
        mat = self.maps.get(s)
        if mat is None:
            mat = linalg.zeros(self.dim(t), self.dim(s))
        return mat

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def cycle_composite(self, v):
        """Composite of the n arrows starting and ending at vertex v."""
        n = self.n
        acc = linalg.identity(self.dim(v))
        s = v
        for _ in range(n):
            t = _arrow_target(n, s)
            acc = linalg.matmul(self.arrow(s), acc, inner=self.dim(s))
            s = t
        return acc

    def is_nilpotent(self) -> bool:
        for v in range(self.n):
            d = self.dim(v)
            if d == 0:
                continue
            c = self.cycle_composite(v)
            p = c
            for _ in range(d - 1):
                p = linalg.matmul(p, c)
            if not linalg.is_zero(p):
                return False
        return True


@dataclass(frozen=True)
class EulerForm:
    """Euler form sum_v d_v e_v - sum_{s->t} d_s e_t of the cyclic (or line) quiver."""

    n: Optional[int]

    def __call__(self, d: dict, e: dict) -> int:
        val = sum(dv * e.get(v, 0) for v, dv in d.items())
        val -= sum(ds * e.get(_arrow_target(self.n, s), 0) for s, ds in d.items())
        return val


def euler_form(n, d, e) -> int:
    return EulerForm(n)(d, e)


@functools.lru_cache(maxsize=4096)
def rep_from_interval(n: Optional[int], a: int, b: int) -> NilpotentRep:
    """Interval module on basis e_{a+1}..e_{b-1}; labels need not be normalized.

    Results are cached and shared, so callers must not mutate them.
    """
    if b <= a + 1:
        raise ValueError(f"empty interval [{a},{b}]")
    vertex = (lambda j: j % n) if n is not None else (lambda j: j)
    pos = {}
    dims = {v: 0 for v in range(n)} if n is not None else {}
    for j in range(a + 1, b):
        v = vertex(j)
        pos[j] = dims.get(v, 0)
        dims[v] = pos[j] + 1
    maps = {s: linalg.zeros(dims.get(_arrow_target(n, s), 0), dims[s]) for s in dims if dims[s]}
    for j in range(a + 2, b):
        s = vertex(j)
        maps[s][pos[j - 1]][pos[j]] = Fraction(1)
    return NilpotentRep(n, dims, maps)


def build_rep(m: IndecModule) -> NilpotentRep:
    if m.infinite:
        raise RankMismatch(None, "finite")
    return rep_from_interval(m.rank, m.a, m.b)


def build_rep_line(m: IndecModule) -> NilpotentRep:
    if not m.infinite:
        raise RankMismatch(m.rank, None)
    return rep_from_interval(None, m.a, m.b)


def _intertwiner_rows(r1: NilpotentRep, r2: NilpotentRep):
    """Sparse constraint rows for f_t X = Y f_s over every arrow s -> t."""
    n = r1.n
    offset = {}
    nvars = 0
    verts = sorted(set(r1.dims) | set(r2.dims))
    for v in verts:
        offset[v] = nvars
        nvars += r2.dim(v) * r1.dim(v)

    def var(v, i, k):  # entry (i, k) of f_v, shape r2.dim(v) x r1.dim(v)
        return offset[v] + i * r1.dim(v) + k

    rows = []
    for s in sorted(v for v in r1.dims if r1.dim(v)):
        t = _arrow_target(n, s)
        if r2.dim(t) == 0:
            continue
        x = r1.arrow(s)  # r1[t] x r1[s]
        y = r2.arrow(s)  # r2[t] x r2[s]
        for i in range(r2.dim(t)):
            for j in range(r1.dim(s)):
                row = {}
                for k in range(r1.dim(t)):
                    if x[k][j]:
                        c = var(t, i, k)
                        row[c] = row.get(c, 0) + x[k][j]
                for l in range(r2.dim(s)):
                    if y[i][l]:
                        c = var(s, l, j)
                        row[c] = row.get(c, 0) - y[i][l]
                if any(row.values()):
                    rows.append(row)
    return rows, nvars


def hom_dim_linalg(r1: NilpotentRep, r2: NilpotentRep) -> int:
    """dim Hom(r1, r2): nullity of the stacked intertwiner system."""
    if r1.n != r2.n:
        raise RankMismatch(r1.n, r2.n)
    rows, nvars = _intertwiner_rows(r1, r2)
    return linalg.nullity(rows, nvars)


def hom_dim_line(m1: IndecModule, m2: IndecModule) -> int:
    return hom_dim_linalg(build_rep_line(m1), build_rep_line(m2))


def _check_finite_pair(m1, m2):
    if m1.rank != m2.rank:
        raise RankMismatch(m1.rank, m2.rank)
    if m1.infinite:
        raise RankMismatch(None, "finite")


def ext_dim_ar(m1: IndecModule, m2: IndecModule) -> int:
    """dim Ext^1(m1, m2) = dim Hom(m2, tau m1)."""
    _check_finite_pair(m1, m2)
    return hom_dim_linalg(build_rep(m2), build_rep(tau_module(m1)))


def _ext_euler(r1, r2):
    ext = hom_dim_linalg(r1, r2) - euler_form(r1.n, r1.dims, r2.dims)
    if ext < 0:
        raise NegativeExt(f"Euler form route gave Ext dimension {ext}")
    return ext


def ext_dim_euler(m1: IndecModule, m2: IndecModule) -> int:
    """dim Ext^1(m1, m2) = dim Hom(m1, m2) - <dim m1, dim m2>."""
    _check_finite_pair(m1, m2)
    return _ext_euler(build_rep(m1), build_rep(m2))


def ext_dim_line(m1: IndecModule, m2: IndecModule) -> int:
    if not (m1.infinite and m2.infinite):
        raise RankMismatch(m1.rank, m2.rank)
    return hom_dim_linalg(build_rep_line(m2), build_rep_line(tau_module(m1)))


def ext_dim_line_euler(m1: IndecModule, m2: IndecModule) -> int:
    if not (m1.infinite and m2.infinite):
        raise RankMismatch(m1.rank, m2.rank)
    return _ext_euler(build_rep_line(m1), build_rep_line(m2))
