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
Integer algebra of the six-sided dragon contours.

A contour starts at S = Hex(0,0) and walks a units southwest, b southeast,
c north, d northeast, e northwest and finally |f| units vertically back to S.
Family F1 and F2 differ only in the constant term of the derived sides.
"""

import logging
from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Dict, List, Tuple

from src.errors import InvalidSpec

logger = logging.getLogger(__name__)

LatticePoint = Tuple[int, int]


class Family(IntEnum):
    F1 = 1
    F2 = 2

    @classmethod
    def parse(cls, value) -> "Family":
        text = str(value).strip().upper().lstrip("F")
        try:
            return cls(int(text))
        except ValueError:
            raise InvalidSpec(f"unknown family '{value}' (expected 1 or 2)") from None


class SideLabel(Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"
    E = "e"
    F = "f"


SIDE_ORDER: Tuple[SideLabel, ...] = tuple(SideLabel)

# unit steps in affine lattice coordinates (coefficients of v2, v1)
SOUTHWEST: LatticePoint = (-1, 0)
SOUTHEAST: LatticePoint = (1, -1)
NORTH: LatticePoint = (0, 1)
NORTHEAST: LatticePoint = (1, 0)
NORTHWEST: LatticePoint = (-1, 1)
SOUTH: LatticePoint = (0, -1)

_FAMILY_OFFSET: Dict[Family, int] = {Family.F1: 1, Family.F2: -1}


@dataclass(frozen=True)
class ContourSpec:
    family: Family
    a: int
    b: int
    c: int
    d: int
    e: int
    f_len: int
    f_signed: int

    @property
    def triple(self) -> Tuple[int, int, int]:
        return self.a, self.b, self.c

    def side_length(self, side: SideLabel) -> int:
        return {
            SideLabel.A: self.a,
            SideLabel.B: self.b,
            SideLabel.C: self.c,
            SideLabel.D: self.d,
            SideLabel.E: self.e,
            SideLabel.F: self.f_len,
        }[side]

    def __str__(self) -> str:
        return f"DR{int(self.family)}({self.a},{self.b},{self.c})"


@dataclass(frozen=True)
class SideSegment:
    label: SideLabel
    start: LatticePoint
    end: LatticePoint
    step: LatticePoint
    length: int

    def points(self) -> List[LatticePoint]:
        """Lattice points on the closed segment; a single point when length is 0."""
        (p, q), (dp, dq) = self.start, self.step
        return [(p + k * dp, q + k * dq) for k in range(self.length + 1)]

    def unit_steps(self) -> List[Tuple[LatticePoint, LatticePoint]]:
        pts = self.points()
        return list(zip(pts, pts[1:]))


def derive_sides(family: Family, a: int, b: int, c: int) -> ContourSpec:
    family = Family(family)
    k = _FAMILY_OFFSET[family]
    d = 2 * b - a - 2 * c + k
    e = 3 * b - 2 * a - 2 * c + k
    f_signed = c + d - a
    return ContourSpec(family, a, b, c, d, e, abs(f_signed), f_signed)


def is_valid(spec: ContourSpec) -> bool:
    """A region exists: nonnegative a, c, d, e and b at least one."""
    return spec.a >= 0 and spec.c >= 0 and spec.b >= 1 and spec.d >= 0 and spec.e >= 0


def in_theorem_domain(spec: ContourSpec) -> bool:
    return is_valid(spec) and spec.b >= 2


def require_valid(spec: ContourSpec) -> None:
    if not is_valid(spec):
        raise InvalidSpec(
            f"{spec} is not a valid contour (d={spec.d}, e={spec.e}; need b >= 1, d >= 0, e >= 0)"
        )


def perimeter(spec: ContourSpec) -> int:
    require_valid(spec)
    return spec.a + spec.b + spec.c + spec.d + spec.e + spec.f_len


def perimeter_closed_form(spec: ContourSpec) -> int:
    a, b, c = spec.triple
    k = _FAMILY_OFFSET[spec.family]
    if a > c + spec.d:
        return 4 * b - 2 * c + k
    return 8 * b - 4 * a - 4 * c + 3 * k


def _vertical_step(spec: ContourSpec) -> LatticePoint:
    # closing side moves by -f_signed
    return SOUTH if spec.f_signed > 0 else NORTH


def side_segments(spec: ContourSpec, origin: LatticePoint = (0, 0)) -> List[SideSegment]:
    require_valid(spec)
    steps = (SOUTHWEST, SOUTHEAST, NORTH, NORTHEAST, NORTHWEST, _vertical_step(spec))
    segments = []
    point: LatticePoint = origin
    for label, step in zip(SIDE_ORDER, steps):
        length = spec.side_length(label)
        end = (point[0] + length * step[0], point[1] + length * step[1])
        segments.append(SideSegment(label, point, end, step, length))
        point = end
    if point != origin:
        raise InvalidSpec(f"{spec} does not close: walk ends at {point}")
    return segments


def signed_double_area(points: List[LatticePoint]) -> int:
    total = 0
    for (x1, y1), (x2, y2) in zip(points, points[1:]):
        total += x1 * y2 - x2 * y1
    return total


def trace_contour(spec: ContourSpec, origin: LatticePoint = (0, 0)) -> List[LatticePoint]:
    """S, P1..P5, S as hexagon centers, counterclockwise."""
    segments = side_segments(spec, origin)
    points = [segment.start for segment in segments] + [segments[-1].end]
    if signed_double_area(points) < 0:
        logger.debug(f"{spec}: reversing clockwise contour")
        points.reverse()
    return points


def flip_over_b(spec: ContourSpec) -> ContourSpec:
    """Reflection across the b-side: (a, b, c) -> (f, e, d) in the same family."""
    require_valid(spec)
    if spec.f_signed < 0:
        raise InvalidSpec(f"{spec}: flip over the b-side needs a <= c + d (a={spec.a}, c+d={spec.c + spec.d})")
    image = derive_sides(spec.family, spec.f_len, spec.e, spec.d)
    if not is_valid(image):
        raise InvalidSpec(f"{spec}: flipped contour {image} is not valid")
    return image


def flip_horizontal(spec: ContourSpec) -> ContourSpec:
    """Reflection across the horizontal line through the western vertex; swaps families."""
    require_valid(spec)
    if spec.f_signed >= 0:
        raise InvalidSpec(f"{spec}: horizontal flip needs a > c + d (a={spec.a}, c+d={spec.c + spec.d})")
    a, b, c = spec.triple
    if spec.family is Family.F1:
        image = derive_sides(Family.F2, b, a, 2 * a - 2 * b + c - 1)
    else:
        image = derive_sides(Family.F1, b, a, 2 * a - 2 * b + c + 1)
    if not is_valid(image):
        raise InvalidSpec(f"{spec}: flipped contour {image} is not valid")
    return image
