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

"""
Exact Euclidean geometry of the dragon lattice.

Coordinates are sympy expressions in Q(sqrt(3)); floats only appear through
`to_float` for SVG output. Membership decisions never come through here, they
use the rational affine anchors of `faces.face_anchor`.
"""

from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

import sympy
from sympy import Expr, Rational, sqrt

from .faces import (
    FaceId,
    FaceKind,
    RationalPoint,
    face_anchor,
    square_hexagons,
    triangle_hexagons,
)

EuclideanPoint = Tuple[Expr, Expr]

SQRT3 = sqrt(3)
# edge length of every polygon when hexagon centers are one unit apart
LATTICE_EDGE: Expr = (SQRT3 - 1) / 2

_HEX_DIRECTIONS: Tuple[Tuple[Expr, Expr], ...] = (
    (Rational(1), Rational(0)),
    (Rational(1, 2), SQRT3 / 2),
    (Rational(-1, 2), SQRT3 / 2),
    (Rational(-1), Rational(0)),
    (Rational(-1, 2), -SQRT3 / 2),
    (Rational(1, 2), -SQRT3 / 2),
)


def _rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def to_euclidean(point: RationalPoint) -> EuclideanPoint:
    p, q = _rational(point[0]), _rational(point[1])
    return sympy.expand(p * SQRT3 / 2), sympy.expand(q + p / 2)


def face_centroid(face: FaceId) -> EuclideanPoint:
    return to_euclidean(face_anchor(face))


def _hex_center(point: Tuple[int, int]) -> EuclideanPoint:
    return to_euclidean((Fraction(point[0]), Fraction(point[1])))


def _add(a: EuclideanPoint, b: EuclideanPoint, scale: Expr = Rational(1)) -> EuclideanPoint:
    return sympy.expand(a[0] + scale * b[0]), sympy.expand(a[1] + scale * b[1])


def face_polygon(face: FaceId) -> List[EuclideanPoint]:
    """Polygon vertices of a face, counterclockwise."""
    s = LATTICE_EDGE
    if face.kind is FaceKind.HEX:
        center = face_centroid(face)
        return [_add(center, direction, s) for direction in _HEX_DIRECTIONS]

    if face.kind.is_square:
        h1, h2 = (_hex_center(h) for h in square_hexagons(face))
        mid = face_centroid(face)
        u = (h2[0] - h1[0], h2[1] - h1[1])
        perp = (-u[1], u[0])
        half = s / 2
        corners = []
        for su, sp in ((1, -1), (1, 1), (-1, 1), (-1, -1)):
            offset = (su * u[0] + sp * perp[0], su * u[1] + sp * perp[1])
            corners.append(_add(mid, offset, half))
        return corners

    centroid = face_centroid(face)
    vertices = []
    for corner in triangle_hexagons(face):
        hx, hy = _hex_center(corner)
        toward = (centroid[0] - hx, centroid[1] - hy)
        vertices.append(_add((hx, hy), toward, s * SQRT3))
    return vertices


def polygon_area(points: Sequence[EuclideanPoint]) -> Expr:
    """Signed shoelace area; positive for counterclockwise polygons."""
    total = Rational(0)
    for (x1, y1), (x2, y2) in zip(points, list(points[1:]) + [points[0]]):
        total += x1 * y2 - x2 * y1
    return sympy.radsimp(sympy.expand(total / 2))


def to_float(point: EuclideanPoint) -> Tuple[float, float]:
    return float(point[0]), float(point[1])


@lru_cache(maxsize=None)
def _float_template(kind: FaceKind) -> Tuple[Tuple[float, float], ...]:
    return tuple(to_float(v) for v in face_polygon(FaceId(kind, 0, 0)))


def face_polygon_float(face: FaceId) -> List[Tuple[float, float]]:
    """Float polygon for drawing: the origin template shifted to the face's hexagon."""
    dx, dy = to_float(to_euclidean((Fraction(face.p), Fraction(face.q))))
    return [(x + dx, y + dy) for x, y in _float_template(face.kind)]
