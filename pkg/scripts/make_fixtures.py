"""Regenerate the embedded fixture files under src/conway_tower/data/."""

from pathlib import Path

from conway_tower.diagram import Crossing, Diagram
from conway_tower.fixtures import braid_closure
from conway_tower.geometry import Contour, ContourSet
from conway_tower.textio import serialize_contours, serialize_diagram

DATA = Path(__file__).resolve().parents[1] / "src" / "conway_tower" / "data"

BRAIDS = {
    "hopf_pos": [1, 1],
    "hopf_neg": [-1, -1],
    "trefoil_right": [1, 1, 1],
    "trefoil_left": [-1, -1, -1],
    "figure_eight": [1, -2, 1, -2],
    "knot_5_1": [1, 1, 1, 1, 1],
    "knot_5_2": [1, 1, 1, 2, -1, 2],
    "knot_6_2": [-1, 2, -1, 2, 2, 2],
    "six_r3": [1, 1, 1, 2, 1, 2],
    "unlink2_r2": [1, -1],
    "torus_3_5": [1, 2] * 5,
}

CONTOURS = {
    "hopf": [
        [(0, 0), (6, 1), (7, 7), (1, 5)],
        [(3, 2), (11, 3), (10, 9), (4, 11)],
    ],
    "trefoil": [[(10, 7), (14, 5), (2, 10), (6, 18), (14, 8), (7, 3)]],
    "disjoint_triangles": [
        [(0, 0), (3, 0), (0, 3)],
        [(10, 10), (14, 11), (11, 15)],
    ],
}


def main():
    DATA.mkdir(exist_ok=True)
    docs = {name: braid_closure(word) for name, word in BRAIDS.items()}
    docs["unknot"] = Diagram((), 1)
    docs["unlink2"] = Diagram((), 2)
    docs["kink"] = Diagram((Crossing(1, 1, 2, 2, 1, 1, "A"),))
    for name, d in docs.items():
        (DATA / f"{name}.diagram").write_text(serialize_diagram(d, name))
    for name, polys in CONTOURS.items():
        cs = ContourSet(tuple(Contour(tuple(p)) for p in polys))
        (DATA / f"{name}.contours").write_text(serialize_contours(cs))


if __name__ == "__main__":
    main()
