"""Conway polynomial coefficients of oriented link diagrams.

Coefficients are computed from descending diagrams: switch the crossings
where a diagram differs from its descending state, one at a time, and add
up the signed coefficients of the smoothings met along the way.
"""

from .descending import Marking, default_marking, descending_diagram, diff_set
from .diagram import (
    Crossing,
    Diagram,
    DiagramError,
    canonical_key,
    change_crossing,
    component_count,
    sign,
    skein_triple,
    smooth_crossing,
)
from .engine import ConwaySeries, MemoTable, coefficient, conway_polynomial
from .textio import parse_diagram, serialize_diagram

__all__ = [
    "ConwaySeries",
    "Crossing",
    "Diagram",
    "DiagramError",
    "Marking",
    "MemoTable",
    "canonical_key",
    "change_crossing",
    "coefficient",
    "component_count",
    "conway_polynomial",
    "default_marking",
    "descending_diagram",
    "diff_set",
    "parse_diagram",
    "serialize_diagram",
    "sign",
    "skein_triple",
    "smooth_crossing",
]
