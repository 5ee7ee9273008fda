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
Faces of the dragon lattice (the 3.4.6.4 dissection of the plane).

Hexagon centers sit at p*v2 + q*v1 with v1 = (0, 1) and v2 = (sqrt(3)/2, 1/2).
Every square separates two adjacent hexagons and every triangle sits between
three mutually adjacent hexagons, so all faces are addressed by a kind tag and
the integer coordinates of one hexagon.
"""

from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Callable, Dict, Iterable, List, Tuple, TypeVar

Point = Tuple[int, int]
RationalPoint = Tuple[Fraction, Fraction]
T = TypeVar("T")

_HALF = Fraction(1, 2)
_THIRD = Fraction(1, 3)


class FaceKind(IntEnum):
    HEX = 0
    SQUARE_E = 1
    SQUARE_NE = 2
    SQUARE_NW = 3
    TRI_UP = 4
    TRI_DOWN = 5

    @property
    def label(self) -> str:
        return _KIND_LABELS[self]

    @property
    def is_square(self) -> bool:
        return self in (FaceKind.SQUARE_E, FaceKind.SQUARE_NE, FaceKind.SQUARE_NW)

    @property
    def is_triangle(self) -> bool:
        return self in (FaceKind.TRI_UP, FaceKind.TRI_DOWN)

    @classmethod
    def from_label(cls, label: str) -> "FaceKind":
        try:
            return _LABEL_KINDS[label]
        except KeyError:
            raise ValueError(f"unknown face kind '{label}'") from None


_KIND_LABELS: Dict[FaceKind, str] = {
    FaceKind.HEX: "Hex",
    FaceKind.SQUARE_E: "SquareE",
    FaceKind.SQUARE_NE: "SquareNE",
    FaceKind.SQUARE_NW: "SquareNW",
    FaceKind.TRI_UP: "TriUp",
    FaceKind.TRI_DOWN: "TriDown",
}
_LABEL_KINDS: Dict[str, FaceKind] = {label: kind for kind, label in _KIND_LABELS.items()}


class Color(Enum):
    BLACK = "B"
    WHITE = "W"


@dataclass(frozen=True, order=True)
class FaceId:
    """One fundamental region; ordering is lexicographic by (kind, p, q)."""

    kind: FaceKind
    p: int
    q: int

    def translated(self, dp: int, dq: int) -> "FaceId":
        return FaceId(self.kind, self.p + dp, self.q + dq)

    def __str__(self) -> str:
        return f"{self.kind.label}({self.p},{self.q})"


def hexagon(p: int, q: int) -> FaceId:
    return FaceId(FaceKind.HEX, p, q)


def face_color(face: FaceId) -> Color:
    return Color.BLACK if face.kind.is_square else Color.WHITE


def square_between(h1: Point, h2: Point) -> FaceId:
    """The square separating two adjacent hexagon centers."""
    (p1, q1), (p2, q2) = sorted((h1, h2))
    dp, dq = p2 - p1, q2 - q1
    if (dp, dq) == (1, 0):
        return FaceId(FaceKind.SQUARE_E, p1, q1)
    if (dp, dq) == (0, 1):
        return FaceId(FaceKind.SQUARE_NE, p1, q1)
    if (dp, dq) == (1, -1):
        return FaceId(FaceKind.SQUARE_NW, p2, q2)
    raise ValueError(f"hexagons {h1} and {h2} are not adjacent")


def square_hexagons(face: FaceId) -> Tuple[Point, Point]:
    p, q = face.p, face.q
    if face.kind is FaceKind.SQUARE_E:
        return (p, q), (p + 1, q)
    if face.kind is FaceKind.SQUARE_NE:
        return (p, q), (p, q + 1)
    if face.kind is FaceKind.SQUARE_NW:
        return (p, q), (p - 1, q + 1)
    raise ValueError(f"{face} is not a square")


def triangle_hexagons(face: FaceId) -> Tuple[Point, Point, Point]:
    """Hexagon centers around a triangle, counterclockwise."""
    p, q = face.p, face.q
    if face.kind is FaceKind.TRI_UP:
        return (p, q), (p + 1, q), (p, q + 1)
    if face.kind is FaceKind.TRI_DOWN:
        return (p + 1, q), (p + 1, q + 1), (p, q + 1)
    raise ValueError(f"{face} is not a triangle")


def _raw_neighbors(face: FaceId) -> List[FaceId]:
    p, q = face.p, face.q
    kind = face.kind
    if kind is FaceKind.HEX:
        return [
            FaceId(FaceKind.SQUARE_E, p, q),
            FaceId(FaceKind.SQUARE_NE, p, q),
            FaceId(FaceKind.SQUARE_NW, p, q),
            FaceId(FaceKind.SQUARE_E, p - 1, q),
            FaceId(FaceKind.SQUARE_NE, p, q - 1),
            FaceId(FaceKind.SQUARE_NW, p + 1, q - 1),
        ]
    if kind is FaceKind.SQUARE_E:
        return [
            hexagon(p, q),
            hexagon(p + 1, q),
            FaceId(FaceKind.TRI_UP, p, q),
            FaceId(FaceKind.TRI_DOWN, p, q - 1),
        ]
    if kind is FaceKind.SQUARE_NE:
        return [
            hexagon(p, q),
            hexagon(p, q + 1),
            FaceId(FaceKind.TRI_UP, p, q),
            FaceId(FaceKind.TRI_DOWN, p - 1, q),
        ]
    if kind is FaceKind.SQUARE_NW:
        return [
            hexagon(p, q),
            hexagon(p - 1, q + 1),
            FaceId(FaceKind.TRI_UP, p - 1, q),
            FaceId(FaceKind.TRI_DOWN, p - 1, q),
        ]
    corners = triangle_hexagons(face)
    return [square_between(corners[i], corners[(i + 1) % 3]) for i in range(3)]


def face_anchor(face: FaceId) -> RationalPoint:
    """Centroid of a face in affine lattice coordinates (coefficients of v2, v1)."""
    p, q = Fraction(face.p), Fraction(face.q)
    kind = face.kind
    if kind is FaceKind.HEX:
        return p, q
    if kind is FaceKind.SQUARE_E:
        return p + _HALF, q
    if kind is FaceKind.SQUARE_NE:
        return p, q + _HALF
    if kind is FaceKind.SQUARE_NW:
        return p - _HALF, q + _HALF
    if kind is FaceKind.TRI_UP:
        return p + _THIRD, q + _THIRD
    return p + 2 * _THIRD, q + 2 * _THIRD


def _half_plane(vector: RationalPoint) -> int:
    x, y = vector
    return 0 if y > 0 or (y == 0 and x > 0) else 1


def _angle_order(a: RationalPoint, b: RationalPoint) -> int:
    ha, hb = _half_plane(a), _half_plane(b)
    if ha != hb:
        return ha - hb
    cross = a[0] * b[1] - a[1] * b[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def ccw_sorted(
    center: RationalPoint, items: Iterable[T], position: Callable[[T], RationalPoint]
) -> List[T]:
    """
    Sort items counterclockwise around center, starting from the +v2 ray.

    Works in affine lattice coordinates; the map to the Euclidean plane has
    positive determinant, so cyclic order is preserved.
    """
    cx, cy = center

    def offset(item: T) -> RationalPoint:
        x, y = position(item)
        return x - cx, y - cy

    return sorted(items, key=cmp_to_key(lambda a, b: _angle_order(offset(a), offset(b))))


@lru_cache(maxsize=None)
def _neighbors_cached(face: FaceId) -> Tuple[FaceId, ...]:
    return tuple(ccw_sorted(face_anchor(face), _raw_neighbors(face), face_anchor))


def face_neighbors(face: FaceId) -> List[FaceId]:
    """Edge-sharing faces in counterclockwise order around the face."""
    return list(_neighbors_cached(face))
