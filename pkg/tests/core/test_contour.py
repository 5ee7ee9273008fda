import unittest

from hypothesis import assume, given
from hypothesis import strategies as st

from src.contour import (
    Family,
    SideLabel,
    base_case_census,
    derive_sides,
    flip_horizontal,
    flip_over_b,
    in_theorem_domain,
    is_base_case,
    is_valid,
    perimeter,
    perimeter_closed_form,
    side_segments,
    trace_contour,
    valid_triples,
)
from src.errors import InvalidSpec

triples = st.tuples(st.integers(0, 12), st.integers(1, 12), st.integers(0, 12))
families = st.sampled_from(list(Family))


def _double_area(points):
    return sum(x1 * y2 - x2 * y1 for (x1, y1), (x2, y2) in zip(points, points[1:]))


class TestDerivedSides(unittest.TestCase):
    def test_first_family_sides(self):
        spec = derive_sides(Family.F1, 1, 1, 0)
        self.assertEqual((spec.d, spec.e, spec.f_signed), (2, 2, 1))
        self.assertEqual(perimeter(spec), 7)
        self.assertEqual(str(spec), "DR1(1,1,0)")

    def test_second_family_sides(self):
        spec = derive_sides(Family.F2, 2, 3, 1)
        self.assertEqual((spec.d, spec.e, spec.f_signed), (1, 2, 0))
        self.assertEqual(perimeter(spec), 9)

    def test_validity(self):
        self.assertTrue(is_valid(derive_sides(Family.F1, 1, 1, 0)))
        self.assertFalse(in_theorem_domain(derive_sides(Family.F1, 1, 1, 0)))
        self.assertFalse(is_valid(derive_sides(Family.F1, 9, 5, 0)))
        with self.assertRaises(InvalidSpec):
            perimeter(derive_sides(Family.F1, 9, 5, 0))

    def test_family_parse(self):
        self.assertIs(Family.parse("F2"), Family.F2)
        self.assertIs(Family.parse(1), Family.F1)
        with self.assertRaises(InvalidSpec):
            Family.parse("three")

    @given(families, triples)
    def test_perimeter_matches_closed_form(self, family, triple):
        spec = derive_sides(family, *triple)
        assume(is_valid(spec))
        self.assertEqual(perimeter(spec), perimeter_closed_form(spec))
        self.assertEqual(perimeter(spec) % 2, 1)

    @given(families, triples)
    def test_contour_closes_counterclockwise(self, family, triple):
        spec = derive_sides(family, *triple)
        assume(is_valid(spec))
        points = trace_contour(spec)
        self.assertEqual(points[0], points[-1])
        self.assertEqual(len(points), 7)
        self.assertGreater(_double_area(points), 0)

    def test_side_segments_follow_side_order(self):
        spec = derive_sides(Family.F1, 2, 5, 3)
        segments = side_segments(spec)
        self.assertEqual([s.label for s in segments], list(SideLabel))
        self.assertEqual(sum(s.length for s in segments), perimeter(spec))
        self.assertEqual(len(segments[1].points()), spec.b + 1)


class TestFlips(unittest.TestCase):
    def test_flip_over_b(self):
        self.assertEqual(flip_over_b(derive_sides(Family.F1, 2, 5, 3)).triple, (4, 6, 3))
        self.assertEqual(flip_over_b(derive_sides(Family.F2, 2, 3, 1)).triple, (0, 2, 1))

    def test_flip_over_b_needs_nonnegative_f(self):
        with self.assertRaises(InvalidSpec):
            flip_over_b(derive_sides(Family.F1, 3, 2, 0))

    def test_flip_horizontal_swaps_family(self):
        image = flip_horizontal(derive_sides(Family.F1, 3, 2, 0))
        self.assertIs(image.family, Family.F2)
        self.assertEqual(image.triple, (2, 3, 1))
        self.assertEqual(perimeter(image), 9)

    def test_flip_horizontal_needs_negative_f(self):
        with self.assertRaises(InvalidSpec):
            flip_horizontal(derive_sides(Family.F1, 2, 5, 3))

    @given(families, triples)
    def test_flip_over_b_preserves_perimeter(self, family, triple):
        spec = derive_sides(family, *triple)
        assume(is_valid(spec) and spec.f_signed >= 0)
        try:
            image = flip_over_b(spec)
        except InvalidSpec:
            return
        self.assertEqual(perimeter(image), perimeter(spec))
        self.assertIs(image.family, spec.family)


class TestCensus(unittest.TestCase):
    def test_base_case_counts(self):
        census = base_case_census()
        self.assertEqual(census.count(Family.F1), 53)
        self.assertEqual(census.count(Family.F2), 28)
        self.assertTrue(all(is_base_case(s) for s in census.triples[Family.F1]))

    def test_valid_triples_sorted_and_bounded(self):
        found = valid_triples(Family.F1, 9, theorem_domain=False)
        self.assertIn((1, 1, 0), [s.triple for s in found])
        perimeters = [perimeter(s) for s in found]
        self.assertEqual(perimeters, sorted(perimeters))
        self.assertTrue(all(p <= 9 for p in perimeters))
        self.assertTrue(all(s.b >= 2 for s in valid_triples(Family.F1, 9)))
