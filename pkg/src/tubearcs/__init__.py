"""Geometric model of tube categories by oriented arcs in an annulus."""

import json
from importlib import resources

from .arcs import ArcAnn, ArcU, canonical_lift, make_arc_ann, make_arc_u, project, shift, tau_arc
from .errors import NegativeExt, NotAdmissible, RankMismatch, TubeError
from .intersections import CrossingReport, cover_count, ineg, ipos, itotal
from .tube import IndecModule, ext_dim_cluster, ext_dim_infinity, ext_dim_tube, hom_dim, make_module

__version__ = "0.1.0"


def output_schema() -> dict:
    """JSON schema (with one ``$defs`` entry per command) for the CLI's JSON output."""
    text = resources.files(__package__).joinpath("schemas/output.schema.json").read_text(encoding="utf-8")
    return json.loads(text)
