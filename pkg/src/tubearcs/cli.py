"""Command-line interface.

Exit codes: 0 success, 1 a property check failed, 2 invalid input.
Arcs and modules are always entered as a lift ``a,b`` together with ``--n``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import intersections as ix
from . import oracle, quiver, sweep, tube
from .arcs import make_arc_ann, make_arc_u
from .errors import TubeError
from .svg import draw_svg


class InputError(Exception):
    pass


def _pair(text):
    try:
        a, b = (int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b' with integers, got {text!r}")
    return a, b


def _dump(obj):
    return json.dumps(obj, separators=(",", ":"))


def _emit(text, output=None):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rank(args):
    if getattr(args, "infinity", False):
        return None
    if args.n is None:
        raise InputError("--n is required (or --infinity)")
    if args.n < 1:
        raise InputError(f"--n must be positive, got {args.n}")
    return args.n


def _arcs(args, count):
    n = _rank(args)
    if len(args.arc) not in count:
        raise InputError(f"expected {' or '.join(map(str, count))} --arc values, got {len(args.arc)}")
    return n, [make_arc_ann(n, a, b) for a, b in args.arc]


def _modules(args, count):
    rank = _rank(args)
    if len(args.mod) not in count:
        raise InputError(f"expected {' or '.join(map(str, count))} --mod values, got {len(args.mod)}")
    for a, b in args.mod:
        make_arc_u(a, b)
    return rank, [tube.make_module(rank, a, b) for a, b in args.mod]


def cmd_intersect(args):
    n, (x, y) = _arcs(args, (2,))
    if args.points:
        rep = ix.cover_count(n, x, y, with_points=True)
    else:
        rep = ix.itotal(n, x, y)
    if args.format == "json":
        return _dump(rep.as_dict(with_points=args.points)) + "\n"
    lines = [f"pos   {rep.pos}", f"neg   {rep.neg}", f"total {rep.total}"]
    if args.points:
        for p in rep.points:
            sign = "+" if p.sign > 0 else "-"
            lines.append(f"{sign} x={p.x} y={p.y} m={p.shift_m}")
    return "\n".join(lines) + "\n"


def cmd_ext(args):
    rank, (m1, m2) = _modules(args, (2,))
    if rank is None:
        d = tube.ext_dim_infinity(m1, m2, cluster=args.cluster)
        rep = ix.strip_total(tube.strip_arc(m1), tube.strip_arc(m2))
    else:
        d = tube.ext_dim_cluster(m1, m2) if args.cluster else tube.ext_dim_tube(m1, m2)
        rep = ix.itotal(rank, tube.phi_inv(m1), tube.phi_inv(m2))
    out = {"ext": d}
    if args.explain:
        out["explain"] = {
            "equals": "total" if args.cluster else "neg",
            "pos": rep.pos,
            "neg": rep.neg,
            "total": rep.total,
        }
    if args.format == "text":
        text = str(d)
        if args.explain:
            which = "I(alpha,beta)" if args.cluster else "I-(alpha,beta)"
            text += f"  = {which}; crossings pos={rep.pos} neg={rep.neg} total={rep.total}"
        return text + "\n"
    return _dump(out) + "\n"


def cmd_quiver(args):
    if args.max_len < 2:
        raise InputError(f"--max-len must be at least 2, got {args.max_len}")
    if args.infinity:
        if args.a_min > args.a_max:
            raise InputError("--a-min must not exceed --a-max")
        q = quiver.generate_infinity_window(args.a_min, args.a_max, args.max_len)
    else:
        q = quiver.generate_window(_rank(args), args.max_len)
    if args.format == "json":
        return _dump(quiver.to_json(q)) + "\n"
    return quiver.to_dot(q)


def cmd_draw(args):
    n, arcs = _arcs(args, (1, 2))
    return draw_svg(n, arcs, view=args.view)


def cmd_oracle(args):
    rank, mods = _modules(args, (1, 2))
    build = oracle.build_rep_line if rank is None else oracle.build_rep
    if len(mods) == 1:
        rep = build(mods[0])
        dims = sorted(rep.dims.items())
        out = {
            "module": str(mods[0]),
            "dims": [[v, d] for v, d in dims],
            "total_dim": rep.total_dim(),
            "composition_series": [s.index for s in tube.composition_series(mods[0])],
        }
    else:
        m1, m2 = mods
        if rank is None:
            ar, eu = oracle.ext_dim_line(m1, m2), oracle.ext_dim_line_euler(m1, m2)
        else:
            ar, eu = oracle.ext_dim_ar(m1, m2), oracle.ext_dim_euler(m1, m2)
        out = {
            "modules": [str(m1), str(m2)],
            "hom": oracle.hom_dim_linalg(build(m1), build(m2)),
            "ext_ar": ar,
            "ext_euler": eu,
        }
    return _dump(out) + "\n"


def _color(text, code):
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def cmd_check(args):
    try:
        sweep.validate_bounds(args.n_max, args.len_max)
    except ValueError as exc:
        raise InputError(str(exc))
    only = set(args.only) if args.only else None
    results = sweep.run_checks(args.n_max, args.len_max, only=only)
    ok = all(r.ok for r in results)
    first = next((r for r in results if not r.ok), None)
    if args.format == "json":
        out = {
            "n_max": args.n_max,
            "len_max": args.len_max,
            "ok": ok,
            "checks": [r.as_dict() for r in results],
            "first_counterexample": None if first is None else f"{first.name}: {first.counterexample}",
        }
        text = _dump(out) + "\n"
    else:
        width = max(len(r.name) for r in results) if results else 0
        lines = []
        for r in results:
            tag = _color("PASS", "32") if r.ok else _color("FAIL", "31")
            lines.append(f"{tag}  {r.name:<{width}}  passed={r.passed} failed={r.failed}")
        npass = sum(r.ok for r in results)
        lines.append(f"{npass}/{len(results)} checks passed")
        if first is not None:
            lines.append(f"first counterexample: {first.name}: {first.counterexample}")
        text = "\n".join(lines) + "\n"
    return text, (0 if ok else 1)


def build_parser():
    p = argparse.ArgumentParser(prog="tubearcs", description="Oriented arcs in the annulus and Ext in tube categories.")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, choices, default):
        sp.add_argument("--format", choices=choices, default=default)
        if "json" in choices:
            sp.add_argument("--json", dest="format", action="store_const", const="json", help="same as --format json")

    def rank_opts(sp, infinity=True):
        sp.add_argument("--n", type=int, help="number of marked points (rank of the tube)")
        if infinity:
            sp.add_argument("--infinity", action="store_true", help="use the A-infinity line instead of a tube")

    sp = sub.add_parser("intersect", help="signed crossing numbers of two arcs")
    rank_opts(sp, infinity=False)
    sp.add_argument("--arc", type=_pair, action="append", default=[], metavar="A,B")
    sp.add_argument("--points", action="store_true", help="count geometrically and list crossing points")
    fmt(sp, ["text", "json"], "text")
    sp.set_defaults(func=cmd_intersect)

    sp = sub.add_parser("ext", help="dimension of Ext^1 between two indecomposables")
    rank_opts(sp)
    sp.add_argument("--mod", type=_pair, action="append", default=[], metavar="A,B")
    sp.add_argument("--cluster", action="store_true", help="Ext^1 in the cluster category")
    sp.add_argument("--explain", action="store_true", help="also report the matching crossing numbers")
    fmt(sp, ["json", "text"], "json")
    sp.set_defaults(func=cmd_ext)

    sp = sub.add_parser("quiver", help="window of the translation quiver")
    rank_opts(sp)
    sp.add_argument("--max-len", type=int, required=True)
    sp.add_argument("--a-min", type=int, default=-3)
    sp.add_argument("--a-max", type=int, default=3)
    sp.add_argument("-o", "--output")
    fmt(sp, ["dot", "json"], "dot")
    sp.set_defaults(func=cmd_quiver)

    sp = sub.add_parser("draw", help="SVG picture of one or two arcs")
    rank_opts(sp, infinity=False)
    sp.add_argument("--arc", type=_pair, action="append", default=[], metavar="A,B")
    sp.add_argument("--view", choices=["cover", "annulus"], default="cover")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_draw)

    sp = sub.add_parser("oracle", help="linear-algebra ground truth for one or two modules")
    rank_opts(sp)
    sp.add_argument("--mod", type=_pair, action="append", default=[], metavar="A,B")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("check", help="run the exhaustive property sweep")
    sp.add_argument("--n-max", type=int, default=6)
    sp.add_argument("--len-max", type=int, default=18)
    sp.add_argument("--only", action="append", choices=[name for name, _ in sweep.CHECKS])
    fmt(sp, ["text", "json"], "text")
    sp.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (TubeError, InputError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(result, tuple):
        result, code = result
    _emit(result, getattr(args, "output", None))
    return code


if __name__ == "__main__":
    sys.exit(main())
