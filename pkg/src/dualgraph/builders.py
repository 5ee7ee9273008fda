# Copyright 2025 Badcompany
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Small synthetic planar graphs used as counting and condensation fixtures."""

from fractions import Fraction

from src.lattice import Color

from .graph import DualGraph


def _parity_color(i: int) -> Color:
    return Color.BLACK if i % 2 == 0 else Color.WHITE


def path_graph(n: int) -> DualGraph:
    vertices = [(i, 0) for i in range(n)]
    return DualGraph.build(
        {v: _parity_color(v[0]) for v in vertices},
        {v: (Fraction(v[0]), Fraction(0)) for v in vertices},
        zip(vertices, vertices[1:]),
    )


def single_edge() -> DualGraph:
    return path_graph(2)


def cycle_graph(n: int) -> DualGraph:
    """Even cycle drawn on the parabola y = x^2, which puts it in convex position."""
    if n < 4 or n % 2:
        raise ValueError(f"cycle length must be even and at least 4, got {n}")
    vertices = [(i, 0) for i in range(n)]
    return DualGraph.build(
        {v: _parity_color(v[0]) for v in vertices},
        {v: (Fraction(v[0]), Fraction(v[0] * v[0])) for v in vertices},
        [(vertices[i], vertices[(i + 1) % n]) for i in range(n)],
    )


def grid_graph(rows: int, cols: int) -> DualGraph:
    vertices = [(i, j) for i in range(rows) for j in range(cols)]
    edges = [((i, j), (i + 1, j)) for i in range(rows - 1) for j in range(cols)]
    edges += [((i, j), (i, j + 1)) for i in range(rows) for j in range(cols - 1)]
    return DualGraph.build(
        {v: _parity_color(v[0] + v[1]) for v in vertices},
        {v: (Fraction(v[1]), Fraction(v[0])) for v in vertices},
        edges,
    )
