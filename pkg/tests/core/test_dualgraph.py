import unittest
from fractions import Fraction

from src.contour import Family, derive_sides
from src.dualgraph import (
    connected_components,
    cycle_graph,
    delete_vertices,
    dual_of,
    edge_key,
    grid_graph,
    inner_faces,
    is_isomorphic,
    path_graph,
    read_graph_text,
    reduce_forced,
    single_edge,
    tile_weighting,
    trace_faces,
    write_graph_text,
)
from src.dualgraph.graph import DualGraph
from src.errors import GraphFormatError, UnknownVertex
from src.lattice import Color, face_color
from src.region import build_region


class TestDualGraph(unittest.TestCase):
    def test_build_rejects_bad_edges(self):
        colors = {(0, 0): Color.BLACK, (1, 0): Color.BLACK}
        positions = {(0, 0): (Fraction(0), Fraction(0)), (1, 0): (Fraction(1), Fraction(0))}
        with self.assertRaises(ValueError):
            DualGraph.build(colors, positions, [((0, 0), (1, 0))])
        with self.assertRaises(ValueError):
            DualGraph.build(colors, positions, [((0, 0), (0, 0))])

    def test_cycle_needs_even_length(self):
        with self.assertRaises(ValueError):
            cycle_graph(5)

    def test_grid_shape(self):
        g = grid_graph(2, 3)
        self.assertEqual(len(g), 6)
        self.assertEqual(g.edge_count(), 7)
        black, white = g.color_classes()
        self.assertEqual((len(black), len(white)), (3, 3))

    def test_dual_of_region_is_bipartite(self):
        g = dual_of(build_region(derive_sides(Family.F1, 1, 1, 0)))
        for u, v in g.edges():
            self.assertIsNot(face_color(u), face_color(v))
        black, white = g.color_classes()
        self.assertEqual(len(black), len(white))

    def test_delete_vertices(self):
        g = delete_vertices(cycle_graph(4), [(0, 0), (1, 0)])
        self.assertEqual(len(g), 2)
        self.assertEqual(g.edge_count(), 1)
        with self.assertRaises(UnknownVertex):
            delete_vertices(cycle_graph(4), [(9, 9)])

    def test_components(self):
        g = delete_vertices(path_graph(5), [(2, 0)])
        self.assertEqual(connected_components(g), [[(0, 0), (1, 0)], [(3, 0), (4, 0)]])


class TestReduceForced(unittest.TestCase):
    def test_path_fully_forced(self):
        result = reduce_forced(path_graph(4))
        self.assertTrue(result.feasible)
        self.assertEqual(len(result.reduced), 0)
        self.assertEqual(len(result.forced_edges), 2)

    def test_odd_path_infeasible(self):
        self.assertFalse(reduce_forced(path_graph(3)).feasible)

    def test_cycle_untouched(self):
        result = reduce_forced(cycle_graph(4))
        self.assertTrue(result.feasible)
        self.assertEqual(len(result.reduced), 4)
        self.assertEqual(result.forced_edges, ())

    def test_forced_weight_accumulates(self):
        g = single_edge()
        g = g.with_weights({edge_key((0, 0), (1, 0)): 2})
        self.assertEqual(reduce_forced(g).forced_weight_exp, 2)


class TestEmbedding(unittest.TestCase):
    def test_cycle_has_two_faces(self):
        faces = trace_faces(cycle_graph(4))
        self.assertEqual(len(faces), 2)
        self.assertEqual(sum(1 for f in faces if f.outer), 1)
        self.assertTrue(all(len(f) == 4 for f in faces))

    def test_grid_inner_faces_are_counterclockwise(self):
        inner = inner_faces(grid_graph(3, 3))
        self.assertEqual(len(inner), 4)
        self.assertTrue(all(f.double_area > 0 for f in inner))

    def test_tree_has_only_outer_face(self):
        faces = trace_faces(path_graph(4))
        self.assertEqual(len(faces), 1)
        self.assertTrue(faces[0].outer)

    def test_region_dual_satisfies_euler(self):
        g = dual_of(build_region(derive_sides(Family.F2, 2, 3, 1)))
        faces = trace_faces(g)
        components = connected_components(g)
        # isolated vertices carry no face walk
        isolated = sum(1 for v in g.vertices if g.degree(v) == 0)
        self.assertEqual(
            len(g) - isolated - g.edge_count() + len(faces), 2 * (len(components) - isolated)
        )


class TestTextFormat(unittest.TestCase):
    def test_round_trip_region_dual(self):
        g = tile_weighting(dual_of(build_region(derive_sides(Family.F1, 2, 2, 0))))
        text = write_graph_text(g)
        restored = read_graph_text(text)
        self.assertEqual(restored.vertices, g.vertices)
        self.assertEqual(restored.weight_exps, g.weight_exps)
        self.assertEqual(write_graph_text(restored), text)

    def test_synthetic_vertices(self):
        text = write_graph_text(grid_graph(2, 2))
        self.assertTrue(text.startswith("mg 4 4\n"))
        self.assertIn("v 0 B Node 0 0 0/1 0/1", text)
        self.assertEqual(read_graph_text(text).edge_count(), 4)

    def test_rejects_malformed_text(self):
        bad = [
            "",
            "graph 1 0\n",
            "mg 2 0\nv 0 B Node 0 0 0/1 0/1\n",
            "mg 1 0\nv 0 W SquareE 0 0 1/2 0/1\n",
            "mg 1 0\nv 0 B Octagon 0 0 0/1 0/1\n",
            "mg 2 0\nv 1 B Node 0 0 0/1 0/1\nv 0 W Node 1 0 1/1 0/1\n",
            "mg 2 1\nv 0 B Node 0 0 0/1 0/1\nv 1 W Node 1 0 1/1 0/1\ne 0 7 0\n",
        ]
        for text in bad:
            with self.assertRaises(GraphFormatError, msg=repr(text)):
                read_graph_text(text)


class TestIsomorphism(unittest.TestCase):
    def test_translated_regions_are_isomorphic(self):
        spec = derive_sides(Family.F1, 2, 2, 0)
        g = dual_of(build_region(spec))
        h = dual_of(build_region(spec, origin=(4, -1)))
        self.assertTrue(is_isomorphic(g, h))

    def test_different_graphs(self):
        self.assertFalse(is_isomorphic(cycle_graph(4), grid_graph(2, 3)))
        self.assertFalse(is_isomorphic(cycle_graph(6), grid_graph(2, 3)))
        self.assertTrue(is_isomorphic(cycle_graph(4), grid_graph(2, 2)))
