"""Closed polygonal contours with rational vertices, and their shadows."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .diagram import Crossing, Diagram

Point = tuple[Fraction, Fraction]

__all__ = [
    "Contour",
    "ContourSet",
    "GeneralPositionError",
    "orientation_determinant",
    "validate_general_position",
    "compute_shadow",
    "cyclic_order",
]


class GeneralPositionError(ValueError):
    pass


def _pt(p) -> Point:
    return Fraction(p[0]), Fraction(p[1])


@dataclass(frozen=True)
class Contour:
    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        verts = tuple(_pt(p) for p in self.vertices)
        if len(verts) < 3:
            raise ValueError(f"contour needs at least 3 vertices, got {len(verts)}")
        for i, p in enumerate(verts):
            if p == verts[(i + 1) % len(verts)]:
                raise ValueError(f"contour repeats vertex {p} consecutively")
        object.__setattr__(self, "vertices", verts)

    def segments(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


@dataclass(frozen=True)
class ContourSet:
    contours: tuple[Contour, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "contours", tuple(self.contours))

    def transformed(self, scale: Fraction, dx: Fraction, dy: Fraction) -> "ContourSet":
        return ContourSet(
            tuple(
                Contour(tuple((scale * x + dx, scale * y + dy) for x, y in c.vertices))
                for c in self.contours
            )
        )


def _cross(u: Point, v: Point) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def _sub(p: Point, q: Point) -> Point:
    return p[0] - q[0], p[1] - q[1]


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def orientation_determinant(p, q, r) -> int:
    """Sign of det(q - p, r - p): +1 counterclockwise, -1 clockwise, 0 collinear."""
    p, q, r = _pt(p), _pt(q), _pt(r)
    return _sgn(_cross(_sub(q, p), _sub(r, p)))


@dataclass(frozen=True)
class _Seg:
    contour: int
    index: int
    p: Point
    q: Point

    @property
    def direction(self) -> Point:
        return _sub(self.q, self.p)


def _all_segments(s: ContourSet) -> list[_Seg]:
    return [
        _Seg(ci, si, p, q)
        for ci, contour in enumerate(s.contours)
        for si, (p, q) in enumerate(contour.segments())
    ]


def _adjacent(s: ContourSet, a: _Seg, b: _Seg) -> bool:
    if a.contour != b.contour:
        return False
    n = len(s.contours[a.contour].vertices)
    return (a.index - b.index) % n in (1, n - 1)


def _on_segment(x: Point, a: Point, b: Point) -> bool:
    if orientation_determinant(a, b, x) != 0:
        return False
    return min(a[0], b[0]) <= x[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= x[1] <= max(a[1], b[1])


def _intersection(a: _Seg, b: _Seg):
    """Parameters (t, u) of a proper crossing of two non-parallel segments, else None."""
    d1, d2 = a.direction, b.direction
    den = _cross(d1, d2)
    if den == 0:
        return None
    w = _sub(b.p, a.p)
    t = _cross(w, d2) / den
    u = _cross(w, d1) / den
    if 0 < t < 1 and 0 < u < 1:
        return t, u
    return None


def validate_general_position(s: ContourSet) -> list[str]:
    problems = []
    verts = [(ci, vi, p) for ci, c in enumerate(s.contours) for vi, p in enumerate(c.vertices)]
    points = [p for _, _, p in verts]
    if len(set(points)) != len(points):
        problems.append("two vertices coincide")
    for (i, a), (j, b), (k, c) in itertools.combinations(enumerate(points), 3):
        if orientation_determinant(a, b, c) == 0:
            problems.append(
                f"vertices {verts[i][:2]}, {verts[j][:2]}, {verts[k][:2]} are collinear"
            )

    segs = _all_segments(s)
    for seg in segs:
        for ci, vi, p in verts:
            if p in (seg.p, seg.q):
                continue
            if _on_segment(p, seg.p, seg.q):
                problems.append(
                    f"vertex {vi} of contour {ci} lies on segment {seg.index} of contour {seg.contour}"
                )

    hits: dict[Point, int] = {}
    for a, b in itertools.combinations(segs, 2):
        if _adjacent(s, a, b):
            continue
        if _cross(a.direction, b.direction) == 0:
            if orientation_determinant(a.p, a.q, b.p) == 0 and (
                _on_segment(b.p, a.p, a.q) or _on_segment(a.p, b.p, b.q)
                or _on_segment(b.q, a.p, a.q) or _on_segment(a.q, b.p, b.q)
            ):
                problems.append(
                    f"segments {a.contour}:{a.index} and {b.contour}:{b.index} overlap"
                )
            continue
        tu = _intersection(a, b)
        if tu is None:
            continue
        t = tu[0]
        x = (a.p[0] + t * a.direction[0], a.p[1] + t * a.direction[1])
        hits[x] = hits.get(x, 0) + 1
    for x, count in hits.items():
        if count > 1:
            problems.append(f"three or more segments meet at {x}")
    return problems


def compute_shadow(s: ContourSet) -> tuple[Diagram, dict[int, Point]]:
    """Crossings of the contours, over/under left unset.

    Returns the shadow diagram and the crossing id -> intersection point map.
    Component order follows contour order; contours with no crossings become
    free loops.
    """
    problems = validate_general_position(s)
    if problems:
        raise GeneralPositionError("; ".join(problems))

    segs = _all_segments(s)
    found = []  # (seg a, seg b, t, u, point)
    for a, b in itertools.combinations(segs, 2):
        if _adjacent(s, a, b):
            continue
        tu = _intersection(a, b)
        if tu is not None:
            t, u = tu
            x = (a.p[0] + t * a.direction[0], a.p[1] + t * a.direction[1])
            found.append((a, b, t, u, x))

    # passages along each contour, in traversal order from the first vertex
    passages: dict[int, list[tuple[int, Fraction, int, str]]] = {}
    for cid, (a, b, t, u, _) in enumerate(found, start=1):
        passages.setdefault(a.contour, []).append((a.index, t, cid, "A"))
        passages.setdefault(b.contour, []).append((b.index, u, cid, "B"))

    slot: dict[tuple[int, str], dict[str, int]] = {}
    next_edge = 1
    order = []
    free = 0
    for ci in range(len(s.contours)):
        seq = sorted(passages.get(ci, []))
        if not seq:
            free += 1
            continue
        k = len(seq)
        first = next_edge
        order.append(first)
        for j, (_, _, cid, strand) in enumerate(seq):
            # edge into passage j is first + j; edge out of it is the next one
            slot[(cid, strand)] = {"in": first + j, "out": first + (j + 1) % k}
        next_edge += k

    crossings = []
    points = {}
    for cid, (a, b, _, _, x) in enumerate(found, start=1):
        sa, sb = slot[(cid, "A")], slot[(cid, "B")]
        orient = orientation_determinant((0, 0), a.direction, b.direction)
        crossings.append(Crossing(cid, sa["in"], sa["out"], sb["in"], sb["out"], orient, None))
        points[cid] = x
    return Diagram(tuple(crossings), free, tuple(order) or None), points


def cyclic_order(s: ContourSet, shadow: Diagram) -> dict[int, list[str]]:
    """Counterclockwise order of the four edge-ends at each crossing, from geometry.

    Slot names are ``a_in``, ``a_out``, ``b_in``, ``b_out``; each list starts
    at ``a_out``.
    """
    segs = _all_segments(s)
    out = {}
    pairs = [
        (a, b)
        for a, b in itertools.combinations(segs, 2)
        if not _adjacent(s, a, b) and _intersection(a, b) is not None
    ]
    for cid, (a, b) in enumerate(pairs, start=1):
        da, db = a.direction, b.direction
        rays = {
            "a_out": da,
            "a_in": (-da[0], -da[1]),
            "b_out": db,
            "b_in": (-db[0], -db[1]),
        }
        names = sorted(rays, key=lambda name: _angle_key(rays[name]))
        i = names.index("a_out")
        out[cid] = names[i:] + names[:i]
    return out


def _angle_key(v: Point):
    """Exact sort key for the polar angle of ``v`` in [0, 2*pi)."""
    x, y = v
    half = 0 if (y > 0 or (y == 0 and x > 0)) else 1
    # within a half plane, order by the cotangent, decreasing
    return (half, _Slope(x, y))


class _Slope:
    def __init__(self, x, y):
        self.x, self.y = x, y

    def __lt__(self, other: "_Slope") -> bool:
        # self before other when cross(self, other) > 0 (same half plane)
        return _cross((self.x, self.y), (other.x, other.y)) > 0

    def __eq__(self, other) -> bool:
        return _cross((self.x, self.y), (other.x, other.y)) == 0


def random_contours(rng, n_contours: int, n_vertices: Sequence[int], box: int = 24) -> ContourSet:
    """Random integer contours in general position (rejection sampling)."""
    while True:
        contours = []
        for k in range(n_contours):
            pts = [(rng.randrange(box), rng.randrange(box)) for _ in range(n_vertices[k])]
            try:
                contours.append(Contour(tuple(pts)))
            except ValueError:
                break
        else:
            cs = ContourSet(tuple(contours))
            if not validate_general_position(cs):
                return cs
