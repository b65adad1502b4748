"""Admissible arcs in the universal-cover strip and in the annulus with n marked points.

An arc in the strip is the integer pair ``[a, b]`` joining the marked points
``(a, 0)`` and ``(b, 0)`` left to right.  An arc in the annulus is the orbit of
such a pair under the deck translation ``x -> x + n``; it is stored by its start
reduced mod ``n`` and its combinatorial length, so equal homotopy classes are
equal values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAdmissible

__all__ = [
    "ArcU",
    "ArcAnn",
    "make_arc_u",
    "make_arc_ann",
    "shift",
    "project",
    "canonical_lift",
    "winding_number",
    "combinatorial_length",
    "tau_arc",
    "tau_inv_arc",
    "lift_at",
    "annulus_arcs",
]


@dataclass(frozen=True, order=True)
class ArcU:
    """Oriented admissible arc [a, b] in the strip, b > a + 1."""

    a: int
    b: int

    def __post_init__(self):
        if self.b <= self.a + 1:
            raise NotAdmissible(self.a, self.b)

    @property
    def length(self) -> int:
        return self.b - self.a

    def __str__(self):
        return f"[{self.a},{self.b}]"


@dataclass(frozen=True)
class ArcAnn:
    """Admissible arc in the annulus A(n): start point a in [0, n) and length >= 2."""

    n: int
    a: int
    length: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"rank must be positive, got {self.n}")
        if not 0 <= self.a < self.n:
            raise ValueError(f"start {self.a} not reduced mod {self.n}")
        if self.length < 2:
            raise NotAdmissible(self.a, self.a + self.length)

    @property
    def b(self) -> int:
        """End point of the canonical lift."""
        return self.a + self.length

    def sort_key(self):
        return (self.length, self.a)

    def __str__(self):
        return f"pi_{self.n}[{self.a},{self.b}]"


def make_arc_u(a: int, b: int) -> ArcU:
    return ArcU(int(a), int(b))


def make_arc_ann(n: int, a: int, b: int) -> ArcAnn:
    """Project the strip arc [a, b] to A(n); validates admissibility first."""
    return project(make_arc_u(a, b), n)


def shift(arc: ArcU, m: int, n: int) -> ArcU:
    """Apply the m-th power of the deck translation (adds m*n to both ends)."""
    return ArcU(arc.a + m * n, arc.b + m * n)


def project(arc: ArcU, n: int) -> ArcAnn:
    return ArcAnn(n, arc.a % n, arc.b - arc.a)


def canonical_lift(arc: ArcAnn) -> ArcU:
    return ArcU(arc.a, arc.a + arc.length)


def winding_number(arc: ArcAnn) -> int:
    return arc.length // arc.n


def combinatorial_length(arc: ArcU) -> int:
    return arc.b - arc.a


def tau_arc(arc: ArcAnn) -> ArcAnn:
    """Rotate by one marked point clockwise: i -> i - 1 mod n."""
    return ArcAnn(arc.n, (arc.a - 1) % arc.n, arc.length)


def tau_inv_arc(arc: ArcAnn) -> ArcAnn:
    return ArcAnn(arc.n, (arc.a + 1) % arc.n, arc.length)


def lift_at(arc: ArcAnn, start_min: int) -> ArcU:
    """The lift of ``arc`` whose start lies in [start_min, start_min + n)."""
    a = start_min + (arc.a - start_min) % arc.n
    return ArcU(a, a + arc.length)


def annulus_arcs(n: int, max_len: int):
    """All arcs of A(n) with 2 <= length <= max_len, ordered by (length, start)."""
    return [ArcAnn(n, a, ln) for ln in range(2, max_len + 1) for a in range(n)]
