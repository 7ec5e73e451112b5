"""Embedded fixture diagrams and their known Conway coefficients."""

from __future__ import annotations

from importlib import resources
from typing import Sequence

from .diagram import Crossing, Diagram, relabel

__all__ = ["braid_closure", "canonical_numbering", "load", "names", "EXPECTED", "CONTOURS"]


# degree -> coefficient, zero terms omitted
EXPECTED: dict[str, dict[int, int]] = {
    "unknot": {0: 1},
    "unlink2": {},
    "hopf_pos": {1: 1},
    "hopf_neg": {1: -1},
    "trefoil_right": {0: 1, 2: 1},
    "trefoil_left": {0: 1, 2: 1},
    "figure_eight": {0: 1, 2: -1},
    "knot_5_1": {0: 1, 2: 3, 4: 1},
    "knot_5_2": {0: 1, 2: 2},
}

# fixtures used by other tests, values not part of the table
EXTRA = ("kink", "unlink2_r2", "knot_6_2", "six_r3", "torus_3_5")

CONTOURS = ("hopf", "trefoil", "disjoint_triangles")


def canonical_numbering(d: Diagram) -> Diagram:
    """Renumber edges along components (in order) and crossings by first visit."""
    if d.component_order is not None:
        starts = [d.cycles[d.component_of[e]] for e in d.component_order]
    else:
        starts = list(d.cycles)
    edge_map: dict[int, int] = {}
    cross_map: dict[int, int] = {}
    for cyc in starts:
        for e in cyc:
            edge_map[e] = len(edge_map) + 1
            cid = d.heads[e][0]
            cross_map.setdefault(cid, len(cross_map) + 1)
    return relabel(d, edge_map, cross_map)


def braid_closure(word: Sequence[int], strands: int | None = None) -> Diagram:
    """Closure of a braid word; generator ``i`` crosses positions i and i+1.

    Strands run upwards.  The left strand moves right (strand A), the right
    one moves left (strand B), so every crossing has orient = +1; a positive
    letter puts A on top.
    """
    if strands is None:
        strands = max((abs(g) for g in word), default=0) + 1
    ids = iter(range(1, 4 * len(word) + strands + 1))
    start = [next(ids) for _ in range(strands)]
    current = list(start)
    crossings = []
    for k, g in enumerate(word, start=1):
        i = abs(g) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        a_out, b_out = next(ids), next(ids)
        crossings.append(
            Crossing(k, current[i], a_out, current[i + 1], b_out, 1, "A" if g > 0 else "B")
        )
        current[i], current[i + 1] = b_out, a_out

    # closing arcs identify the top of each position with its bottom
    close = {top: bottom for top, bottom in zip(current, start) if top != bottom}
    free = sum(1 for top, bottom in zip(current, start) if top == bottom)

    def r(e):
        return close.get(e, e)

    crossings = [
        Crossing(c.id, r(c.a_in), r(c.a_out), r(c.b_in), r(c.b_out), c.orient, c.over)
        for c in crossings
    ]
    return canonical_numbering(Diagram(tuple(crossings), free))


def names() -> list[str]:
    return list(EXPECTED) + list(EXTRA)


def text(name: str) -> str:
    return resources.files(__package__).joinpath("data", f"{name}.diagram").read_text()


def contour_text(name: str) -> str:
    return resources.files(__package__).joinpath("data", f"{name}.contours").read_text()


def load(name: str) -> Diagram:
    from .textio import parse_diagram

    return parse_diagram(text(name))


def load_contours(name: str):
    from .textio import parse_contours

    return parse_contours(contour_text(name))
