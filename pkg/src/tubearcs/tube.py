"""Indecomposables of the rank-n tube and of the A-infinity line, with Hom/Ext dimensions.

``M[a, b]`` (finite rank) and ``X[a, b]`` (rank ``None``, the A-infinity case)
have composition factors S_{a+1}, ..., S_{b-1} read from the socle upwards.
Finite-rank labels are normalized so that 0 <= a < n, which makes the map to
annulus arcs the identity on the underlying data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .arcs import ArcAnn, ArcU
from .errors import NotAdmissible, RankMismatch
from .intersections import ineg, ipos, strip_ineg, strip_total

__all__ = [
    "IndecModule",
    "SimpleLabel",
    "make_module",
    "phi",
    "phi_inv",
    "strip_arc",
    "composition_series",
    "tau_module",
    "hom_dim",
    "ext_dim_tube",
    "ext_dim_cluster",
    "ext_dim_infinity",
    "tube_modules",
]


@dataclass(frozen=True)
class IndecModule:
    rank: Optional[int]
    a: int
    b: int

    def __post_init__(self):
        if self.b <= self.a + 1:
            raise NotAdmissible(self.a, self.b)
        if self.rank is not None:
            if self.rank < 1:
                raise ValueError(f"rank must be positive, got {self.rank}")
            if not 0 <= self.a < self.rank:
                raise ValueError(f"label M[{self.a},{self.b}] not normalized for rank {self.rank}")

    @property
    def infinite(self) -> bool:
        return self.rank is None

    @property
    def length(self) -> int:
        """Composition length (number of simple factors)."""
        return self.b - self.a - 1

    def __str__(self):
        return f"{'X' if self.infinite else 'M'}[{self.a},{self.b}]"


@dataclass(frozen=True, order=True)
class SimpleLabel:
    index: int

    def __str__(self):
        return f"S{self.index}"


def make_module(rank: Optional[int], a: int, b: int) -> IndecModule:
    """Build M[a, b] (or X[a, b] when ``rank`` is None), shifting a into [0, rank)."""
    if b <= a + 1:
        raise NotAdmissible(a, b)
    if rank is not None:
        k = a // rank
        a, b = a - k * rank, b - k * rank
    return IndecModule(rank, a, b)


def _same_rank(m1: IndecModule, m2: IndecModule):
    if m1.rank != m2.rank:
        raise RankMismatch(m1.rank, m2.rank)
    return m1.rank


def phi(arc: ArcAnn) -> IndecModule:
    return IndecModule(arc.n, arc.a, arc.a + arc.length)


def phi_inv(m: IndecModule) -> ArcAnn:
    if m.infinite:
        raise ValueError("phi_inv is only defined for finite rank; use strip_arc")
    return ArcAnn(m.rank, m.a, m.b - m.a)


def strip_arc(m: IndecModule) -> ArcU:
    """The strip arc [a, b] labelling X[a, b]."""
    return ArcU(m.a, m.b)


def composition_series(m: IndecModule) -> list:
    if m.infinite:
        return [SimpleLabel(j) for j in range(m.a + 1, m.b)]
    return [SimpleLabel(j % m.rank) for j in range(m.a + 1, m.b)]


def tau_module(m: IndecModule) -> IndecModule:
    return make_module(m.rank, m.a - 1, m.b - 1)


def hom_dim(m1: IndecModule, m2: IndecModule) -> int:
    """dim Hom(m1, m2) by counting common quotient/submodule images.

    With m1 = M[c, d] and m2 = M[x, y], each admissible image is M[x, t] with
    x + 1 < t <= y, t = d mod n and t - x <= d - c.
    """
    n = _same_rank(m1, m2)
    c, d = m1.a, m1.b
    x, y = m2.a, m2.b
    if n is None:
        return int(c <= x and x + 1 < d <= y)
    hi = min(y, x + d - c)
    return sum(1 for t in range(x + 2, hi + 1) if (t - d) % n == 0)


def ext_dim_tube(m1: IndecModule, m2: IndecModule) -> int:
    """dim Ext^1(m1, m2) in the tube: the negative crossing number of the arcs."""
    n = _same_rank(m1, m2)
    if n is None:
        raise ValueError("ext_dim_tube needs finite rank; use ext_dim_infinity")
    return ineg(n, phi_inv(m1), phi_inv(m2))


def ext_dim_tube_via_ipos(m1: IndecModule, m2: IndecModule) -> int:
    """Same dimension read off as a positive crossing number with the arcs swapped."""
    n = _same_rank(m1, m2)
    return ipos(n, phi_inv(m2), phi_inv(m1))


def ext_dim_cluster(m1: IndecModule, m2: IndecModule) -> int:
    """Ext^1 in the cluster tube, as Ext(m1, m2) plus the dual of Ext(m2, m1)."""
    return ext_dim_tube(m1, m2) + ext_dim_tube(m2, m1)


def ext_dim_infinity(m1: IndecModule, m2: IndecModule, cluster: bool = False) -> int:
    _same_rank(m1, m2)
    if not m1.infinite:
        raise RankMismatch(m1.rank, None)
    x, y = strip_arc(m1), strip_arc(m2)
    if cluster:
        return strip_total(x, y).total
    return strip_ineg(x, y)


def tube_modules(n: int, max_len: int) -> list:
    """All M[a, b] of rank n with 2 <= b - a <= max_len, ordered by (b - a, a)."""
    return [IndecModule(n, a, a + ln) for ln in range(2, max_len + 1) for a in range(n)]
