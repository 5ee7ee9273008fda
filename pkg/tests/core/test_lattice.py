import unittest
from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from src.lattice import (
    Color,
    FaceId,
    FaceKind,
    face_anchor,
    face_color,
    face_neighbors,
    face_polygon,
    hexagon,
    polygon_area,
    square_between,
    square_hexagons,
)

faces = st.builds(FaceId, st.sampled_from(list(FaceKind)), st.integers(-20, 20), st.integers(-20, 20))


class TestFaces(unittest.TestCase):
    def test_colors(self):
        self.assertIs(face_color(hexagon(0, 0)), Color.WHITE)
        self.assertIs(face_color(FaceId(FaceKind.TRI_UP, 0, 0)), Color.WHITE)
        for kind in (FaceKind.SQUARE_E, FaceKind.SQUARE_NE, FaceKind.SQUARE_NW):
            self.assertIs(face_color(FaceId(kind, 3, -1)), Color.BLACK)

    def test_neighbor_counts(self):
        self.assertEqual(len(face_neighbors(hexagon(0, 0))), 6)
        self.assertEqual(len(face_neighbors(FaceId(FaceKind.SQUARE_NE, 0, 0))), 4)
        self.assertEqual(len(face_neighbors(FaceId(FaceKind.TRI_DOWN, 0, 0))), 3)

    def test_square_between_round_trip(self):
        for other in ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)):
            square = square_between((0, 0), other)
            self.assertEqual(set(square_hexagons(square)), {(0, 0), other})

    def test_square_between_rejects_distant_hexagons(self):
        with self.assertRaises(ValueError):
            square_between((0, 0), (1, 1))

    def test_anchors(self):
        self.assertEqual(face_anchor(hexagon(2, 3)), (Fraction(2), Fraction(3)))
        self.assertEqual(face_anchor(FaceId(FaceKind.SQUARE_E, 0, 0)), (Fraction(1, 2), Fraction(0)))
        self.assertEqual(face_anchor(FaceId(FaceKind.TRI_DOWN, 0, 0)), (Fraction(2, 3), Fraction(2, 3)))

    def test_kind_labels(self):
        for kind in FaceKind:
            self.assertIs(FaceKind.from_label(kind.label), kind)
        with self.assertRaises(ValueError):
            FaceKind.from_label("Octagon")

    @given(faces)
    def test_adjacency_is_symmetric_and_bipartite(self, face):
        for neighbor in face_neighbors(face):
            self.assertIn(face, face_neighbors(neighbor))
            self.assertIsNot(face_color(face), face_color(neighbor))


class TestGeometry(unittest.TestCase):
    def test_polygons_are_counterclockwise(self):
        for kind in FaceKind:
            area = polygon_area(face_polygon(FaceId(kind, 0, 0)))
            self.assertGreater(float(area), 0, f"{kind.label} polygon is clockwise")

    def test_unit_cell_area(self):
        """One hexagon, three squares and two triangles tile one lattice cell."""
        total = sum(polygon_area(face_polygon(FaceId(kind, 0, 0))) for kind in FaceKind)
        self.assertEqual(sympy.simplify(total - sympy.sqrt(3) / 2), 0)
