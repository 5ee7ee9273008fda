import unittest
from fractions import Fraction

import pytest
from lxml import etree

from src.contour import (
    Family,
    SideLabel,
    derive_sides,
    flip_horizontal,
    flip_over_b,
    side_segments,
    valid_triples,
)
from src.counting import count_brute, count_kasteleyn
from src.dualgraph import dual_of, is_isomorphic
from src.errors import InvalidSpec, UnbalancedConstruction
from src.formulas import family_formula
from src.lattice import hexagon, square_between
from src.region import (
    RenderStyle,
    aztec_dragon,
    balance_report,
    build_region,
    designated_sides,
    half_aztec_dragon,
    locate_point,
    region_from_json,
    region_to_json,
    render_svg,
)
from src.region.builder import INSIDE, ON_BOUNDARY, OUTSIDE

SVG = "{http://www.w3.org/2000/svg}"


class TestLocatePoint(unittest.TestCase):
    def setUp(self):
        self.square = [(0, 0), (2, 0), (2, 2), (0, 2), (0, 0)]

    def test_inside_boundary_outside(self):
        self.assertEqual(locate_point((Fraction(1), Fraction(1)), self.square), INSIDE)
        self.assertEqual(locate_point((Fraction(2), Fraction(1)), self.square), ON_BOUNDARY)
        self.assertEqual(locate_point((Fraction(0), Fraction(0)), self.square), ON_BOUNDARY)
        self.assertEqual(locate_point((Fraction(3), Fraction(1, 3)), self.square), OUTSIDE)


class TestBuildRegion(unittest.TestCase):
    def test_designated_sides(self):
        self.assertEqual(designated_sides(derive_sides(Family.F1, 2, 5, 3)), {SideLabel.B, SideLabel.E})
        self.assertEqual(
            designated_sides(derive_sides(Family.F1, 3, 2, 0)), {SideLabel.B, SideLabel.E, SideLabel.F}
        )
        self.assertEqual(
            designated_sides(derive_sides(Family.F2, 2, 3, 1)),
            {SideLabel.A, SideLabel.C, SideLabel.D, SideLabel.F},
        )

    def test_small_regions_are_balanced(self):
        for family in Family:
            for spec in valid_triples(family, 11, theorem_domain=False):
                region = build_region(spec)
                black, white = balance_report(region)
                self.assertEqual(black, white, f"{spec} is unbalanced")

    def test_thin_regions_are_empty_with_one_tiling(self):
        for family, triple in ((Family.F1, (1, 1, 1)), (Family.F2, (1, 1, 0))):
            spec = derive_sides(family, *triple)
            region = build_region(spec)
            self.assertEqual(len(region.faces), 0)
            g = dual_of(region)
            self.assertEqual(count_brute(g), 1)
            self.assertEqual(count_kasteleyn(g), 1)
            self.assertEqual(family_formula(family, *triple), 1)

    def test_boundary_faces_are_removed(self):
        spec = derive_sides(Family.F1, 2, 5, 3)
        region = build_region(spec)
        designated = designated_sides(spec)
        for segment in side_segments(spec):
            for h1, h2 in segment.unit_steps():
                self.assertNotIn(square_between(h1, h2), region.faces)
            if segment.label in designated:
                for p, q in segment.points():
                    self.assertNotIn(hexagon(p, q), region.faces)

    def test_translation_invariance(self):
        spec = derive_sides(Family.F2, 2, 3, 1)
        shifted = build_region(spec, origin=(3, -2))
        self.assertEqual(shifted.faces, build_region(spec).translated(3, -2).faces)

    def test_invalid_spec_rejected(self):
        with self.assertRaises(InvalidSpec):
            build_region(derive_sides(Family.F1, 9, 5, 0))

    def test_named_regions(self):
        self.assertEqual(aztec_dragon(2).spec.triple, (2, 2, 0))
        self.assertEqual(half_aztec_dragon(1).spec.triple, (2, 3, 1))
        self.assertIs(half_aztec_dragon(1).spec.family, Family.F2)


class TestExport(unittest.TestCase):
    def setUp(self):
        self.region = build_region(derive_sides(Family.F1, 2, 2, 0))

    def test_json_round_trip(self):
        restored = region_from_json(region_to_json(self.region))
        self.assertEqual(restored.faces, self.region.faces)
        self.assertEqual(restored.spec, self.region.spec)

    def test_tampered_document_rejected(self):
        text = region_to_json(self.region).replace('"black": ', '"black": 1', 1)
        with self.assertRaises(UnbalancedConstruction):
            region_from_json(text)

    def test_svg_has_one_polygon_per_face(self):
        svg = render_svg(self.region, RenderStyle())
        root = etree.fromstring(svg.encode("utf-8"))
        self.assertEqual(root.tag, f"{SVG}svg")
        polygons = root.findall(f"{SVG}g[@id='faces']/{SVG}polygon")
        self.assertEqual(len(polygons), len(self.region.faces))
        self.assertEqual(root.find(f"{SVG}title").text, "DR1(2,2,0)")
        labels = [t.text for t in root.iter(f"{SVG}text")]
        self.assertEqual(len(labels), 6)

    def test_svg_is_deterministic(self):
        self.assertEqual(render_svg(self.region, RenderStyle()), render_svg(self.region, RenderStyle()))


class TestFlippedRegions(unittest.TestCase):
    def check_flips(self, max_perimeter):
        checked = 0
        for family in Family:
            for spec in valid_triples(family, max_perimeter):
                image = flip_over_b(spec) if spec.f_signed >= 0 else flip_horizontal(spec)
                source, target = dual_of(build_region(spec)), dual_of(build_region(image))
                self.assertTrue(is_isomorphic(source, target), f"{spec} -> {image}")
                self.assertEqual(count_kasteleyn(source), count_kasteleyn(target), f"{spec} -> {image}")
                checked += 1
        self.assertGreater(checked, 0)

    def test_small_flips(self):
        self.check_flips(9)

    @pytest.mark.slow
    def test_flips_to_fifteen(self):
        self.check_flips(15)
