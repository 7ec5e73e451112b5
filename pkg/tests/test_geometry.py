from fractions import Fraction

import pytest

from conway_tower import fixtures
from conway_tower.descending import default_marking, descending_diagram
from conway_tower.diagram import canonical_key, swap_strands, validate
from conway_tower.engine import conway_polynomial
from conway_tower.geometry import (
    Contour,
    ContourSet,
    GeneralPositionError,
    compute_shadow,
    cyclic_order,
    orientation_determinant,
    validate_general_position,
)
from conway_tower.reidemeister import rotation, validate_planarity


def triangles(offset=10):
    return ContourSet(
        (
            Contour(((0, 0), (3, 0), (0, 3))),
            Contour(((offset, offset), (offset + 4, offset + 1), (offset + 1, offset + 5))),
        )
    )


class TestOrientation:
    def test_values(self):
        assert orientation_determinant((0, 0), (1, 0), (0, 1)) == 1
        assert orientation_determinant((0, 0), (0, 1), (1, 0)) == -1
        assert orientation_determinant((0, 0), (1, 1), (2, 2)) == 0

    def test_exact_near_collinear(self):
        third = Fraction(1, 3)
        assert orientation_determinant((0, 0), (3, 1), (1, third)) == 0
        assert orientation_determinant((0, 0), (3, 1), (1, third + Fraction(1, 10**30))) == 1


class TestGeneralPosition:
    def test_disjoint_triangles(self):
        assert validate_general_position(triangles()) == []

    def test_vertex_on_edge(self):
        s = ContourSet(
            (Contour(((0, 0), (4, 0), (0, 4))), Contour(((2, 0), (5, -3), (6, 1))))
        )
        assert validate_general_position(s) != []
        with pytest.raises(GeneralPositionError):
            compute_shadow(s)

    def test_collinear_vertices(self):
        s = ContourSet((Contour(((0, 0), (1, 1), (2, 2), (5, 0))),))
        assert any("collinear" in p for p in validate_general_position(s))

    def test_triple_point(self):
        # three segments through (2, 2)
        s = ContourSet(
            (
                Contour(((0, 0), (4, 4), (5, 0))),
                Contour(((0, 4), (4, 0), (-1, 1))),
                Contour(((2, 0), (2, 5), (3, 7))),
            )
        )
        assert validate_general_position(s) != []

    def test_hopf_contours_ok(self):
        assert validate_general_position(fixtures.load_contours("hopf")) == []


class TestShadow:
    def test_disjoint(self):
        d, pts = compute_shadow(triangles())
        assert d.crossings == () and d.free_loops == 2 and pts == {}

    def test_hopf(self):
        d, pts = compute_shadow(fixtures.load_contours("hopf"))
        assert len(d.crossings) == 2 and len(d.cycles) == 2
        assert validate(d) == [] and d.component_order == (1, 3)
        assert all(c.over is None for c in d.crossings)

    def test_trefoil(self):
        d, _ = compute_shadow(fixtures.load_contours("trefoil"))
        assert len(d.crossings) == 3 and len(d.cycles) == 1 and d.free_loops == 0

    def test_orient_matches_determinant(self):
        for name in fixtures.CONTOURS:
            s = fixtures.load_contours(name)
            d, pts = compute_shadow(s)
            segs = [seg for c in s.contours for seg in c.segments()]
            for c in d.crossings:
                x = pts[c.id]
                through = [seg for seg in segs if orientation_determinant(seg[0], seg[1], x) == 0
                           and min(seg[0][0], seg[1][0]) <= x[0] <= max(seg[0][0], seg[1][0])]
                assert len(through) == 2
                (p1, q1), (p2, q2) = through
                det = orientation_determinant((0, 0), (q1[0] - p1[0], q1[1] - p1[1]),
                                              (q2[0] - p2[0], q2[1] - p2[1]))
                assert c.orient in (det, -det)
                # swapping the two strands negates the frame orientation
                assert swap_strands(d, c.id).by_id[c.id].orient == -c.orient

    def test_rotation_matches_geometry(self):
        for name in fixtures.CONTOURS:
            s = fixtures.load_contours(name)
            d, _ = compute_shadow(s)
            geo = cyclic_order(s, d)
            rot = rotation(d)
            for cid, order in geo.items():
                assert tuple(order) == rot[cid]

    def test_planar(self):
        for name in fixtures.CONTOURS:
            d, _ = compute_shadow(fixtures.load_contours(name))
            assert validate_planarity(d)

    @pytest.mark.parametrize("scale, dx, dy", [(2, 0, 0), (Fraction(1, 7), 3, -5), (-1, 1, 1)])
    def test_similarity_invariance(self, scale, dx, dy):
        for name in ("hopf", "trefoil"):
            s = fixtures.load_contours(name)
            d0, _ = compute_shadow(s)
            d1, _ = compute_shadow(s.transformed(Fraction(scale), Fraction(dx), Fraction(dy)))
            a = descending_diagram(d0, default_marking(d0))
            b = descending_diagram(d1, default_marking(d1))
            if scale > 0:
                assert canonical_key(a) == canonical_key(b)
            assert conway_polynomial(a).nonzero() == conway_polynomial(b).nonzero()

    def test_descending_is_trivial(self):
        from conway_tower.descending import all_markings

        for name in ("hopf", "trefoil"):
            d, _ = compute_shadow(fixtures.load_contours(name))
            for m in all_markings(d):
                series = conway_polynomial(descending_diagram(d, m))
                assert all(series[n] == 0 for n in range(1, len(d.crossings) + 1))
