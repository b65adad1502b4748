"""Finite windows of the translation quiver of arcs, for the tube and for ZA_infinity.

The full quivers are infinite upward (and sideways for ZA_infinity), so a
window keeps the arcs of combinatorial length <= ``max_len``.  Vertices on the
window boundary lose some neighbours; :func:`mesh_defects` only inspects the
interior.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .arcs import ArcAnn, ArcU, annulus_arcs, canonical_lift, project, tau_arc

__all__ = [
    "TranslationQuiver",
    "generate_window",
    "generate_infinity_window",
    "mesh_defects",
    "to_dot",
    "to_json",
]


@dataclass(frozen=True)
class TranslationQuiver:
    vertices: tuple
    arrows: tuple
    tau: dict
    max_len: int
    n: Optional[int] = None  # None for the ZA_infinity window
    a_range: Optional[tuple] = None

    def successors(self, v):
        return sorted((y for x, y in self.arrows if x == v), key=_key)

    def predecessors(self, v):
        return sorted((x for x, y in self.arrows if y == v), key=_key)

    def out_degree(self, v):
        return sum(1 for x, _ in self.arrows if x == v)

    def is_interior(self, v) -> bool:
        """True when every neighbour and translate of v needed by the mesh lies in the window."""
        if v.length + 1 > self.max_len:
            return False
        if self.n is None:
            lo, hi = self.a_range
            return lo < v.a < hi
        return True


def _key(v):
    return (v.length, v.a)


def _check_simple(arrows):
    dup = [e for e, k in Counter(arrows).items() if k > 1]
    if dup:
        raise AssertionError(f"multiple arrows {dup[0]}")


def _neighbours(a, b):
    """Lifts of the two possible arrow targets of [a, b]."""
    out = []
    for c, d in ((a, b + 1), (a + 1, b)):
        if d > c + 1:
            out.append((c, d))
    return out


def generate_window(n: int, max_len: int) -> TranslationQuiver:
    """Arcs of A(n) with length in [2, max_len], arrows [a,b] -> [a,b+1], [a+1,b]."""
    if n < 1:
        raise ValueError("n must be positive")
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    verts = annulus_arcs(n, max_len)
    vset = set(verts)
    arrows = []
    for x in verts:
        lift = canonical_lift(x)
        for c, d in _neighbours(lift.a, lift.b):
            y = project(ArcU(c, d), n)
            if y in vset:
                arrows.append((x, y))
    _check_simple(arrows)
    arrows.sort(key=lambda e: (_key(e[0]), _key(e[1])))
    tau = {x: tau_arc(x) for x in verts}
    return TranslationQuiver(tuple(verts), tuple(arrows), tau, max_len, n=n)


def generate_infinity_window(a_min: int, a_max: int, max_len: int) -> TranslationQuiver:
    if a_min > a_max:
        raise ValueError("a_min must not exceed a_max")
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    verts = [ArcU(a, a + ln) for ln in range(2, max_len + 1) for a in range(a_min, a_max + 1)]
    vset = set(verts)
    arrows = []
    for x in verts:
        for c, d in _neighbours(x.a, x.b):
            y = ArcU(c, d)
            if y in vset:
                arrows.append((x, y))
    _check_simple(arrows)
    arrows.sort(key=lambda e: (_key(e[0]), _key(e[1])))
    tau = {}
    for x in verts:
        t = ArcU(x.a - 1, x.b - 1)
        if t in vset:
            tau[x] = t
    return TranslationQuiver(tuple(verts), tuple(arrows), tau, max_len, a_range=(a_min, a_max))


def mesh_defects(q: TranslationQuiver) -> list:
    """Interior vertices x whose predecessors differ from tau of their successors."""
    bad = []
    for x in q.vertices:
        if not q.is_interior(x):
            continue
        preds = set(q.predecessors(x))
        image = set()
        for y in q.successors(x):
            if y not in q.tau:
                image.add(None)
            else:
                image.add(q.tau[y])
        if preds != image:
            bad.append(x)
    return bad


def _label(v):
    if isinstance(v, ArcAnn):
        return f"pi_{v.n}[{v.a},{v.b}]"
    return f"[{v.a},{v.b}]"


def to_dot(q: TranslationQuiver) -> str:
    """Graphviz digraph: solid arrows, dashed edges x -> tau(x)."""
    name = f"tube_{q.n}" if q.n is not None else "ZAinf"
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for v in sorted(q.vertices, key=_key):
        lines.append(f'  "{_label(v)}";')
    for x, y in q.arrows:
        lines.append(f'  "{_label(x)}" -> "{_label(y)}";')
    for x in sorted(q.tau, key=_key):
        lines.append(f'  "{_label(x)}" -> "{_label(q.tau[x])}" [style=dashed, constraint=false];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(q: TranslationQuiver) -> dict:
    verts = sorted(q.vertices, key=_key)
    return {
        "rank": q.n,
        "max_len": q.max_len,
        "vertices": [[v.a, v.b] for v in verts],
        "arrows": [[[x.a, x.b], [y.a, y.b]] for x, y in q.arrows],
        "tau": [[[x.a, x.b], [q.tau[x].a, q.tau[x].b]] for x in sorted(q.tau, key=_key)],
    }
