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
Dragon region construction.

The raw region holds every face whose interior meets the closed contour
polygon. Boundary squares are then removed everywhere, and along the
designated sides the boundary hexagons and the triangles next to the
boundary squares go too:

  F1: sides b and e, plus f when a > c + d
  F2: sides a, c and d, plus f when a <= c + d
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple, Union

from src.contour import ContourSpec, Family, SideLabel, derive_sides, require_valid, side_segments, trace_contour
from src.errors import UnbalancedConstruction
from src.lattice import Color, FaceId, FaceKind, face_anchor, face_color, face_neighbors, hexagon, square_between

logger = logging.getLogger(__name__)

LatticePoint = Tuple[int, int]

INSIDE = 1
ON_BOUNDARY = 0
OUTSIDE = -1


@dataclass(frozen=True, eq=False)
class Region:
    spec: ContourSpec
    faces: FrozenSet[FaceId]
    removed_by_side: Dict[SideLabel, FrozenSet[FaceId]] = field(default_factory=dict)
    origin: LatticePoint = (0, 0)

    @property
    def black_count(self) -> int:
        return sum(1 for f in self.faces if face_color(f) is Color.BLACK)

    @property
    def white_count(self) -> int:
        return len(self.faces) - self.black_count

    def sorted_faces(self) -> List[FaceId]:
        return sorted(self.faces)

    def translated(self, dp: int, dq: int) -> "Region":
        return Region(
            spec=self.spec,
            faces=frozenset(f.translated(dp, dq) for f in self.faces),
            removed_by_side={
                side: frozenset(f.translated(dp, dq) for f in faces)
                for side, faces in self.removed_by_side.items()
            },
            origin=(self.origin[0] + dp, self.origin[1] + dq),
        )


def locate_point(point: Tuple[Fraction, Fraction], polygon: Sequence[LatticePoint]) -> int:
    """INSIDE, ON_BOUNDARY or OUTSIDE for a closed lattice polygon (first point repeated last)."""
    x, y = point
    inside = False
    for (x1, y1), (x2, y2) in zip(polygon, polygon[1:]):
        if (x1, y1) == (x2, y2):
            continue
        cross = (x2 - x1) * (y - y1) - (y2 - y1) * (x - x1)
        if cross == 0 and min(x1, x2) <= x <= max(x1, x2) and min(y1, y2) <= y <= max(y1, y2):
            return ON_BOUNDARY
        if (y1 > y) != (y2 > y):
            x_cross = x1 + (y - y1) * Fraction(x2 - x1, y2 - y1)
            if x < x_cross:
                inside = not inside
    return INSIDE if inside else OUTSIDE


def _candidate_faces(polygon: Sequence[LatticePoint]) -> Iterable[FaceId]:
    ps = [p for p, _ in polygon]
    qs = [q for _, q in polygon]
    for p in range(min(ps) - 1, max(ps) + 2):
        for q in range(min(qs) - 1, max(qs) + 2):
            for kind in FaceKind:
                yield FaceId(kind, p, q)


def select_raw_region(spec: ContourSpec, origin: LatticePoint = (0, 0)) -> FrozenSet[FaceId]:
    """Faces whose interior meets the closed region bounded by the contour."""
    require_valid(spec)
    polygon = trace_contour(spec, origin)
    return frozenset(
        face for face in _candidate_faces(polygon) if locate_point(face_anchor(face), polygon) != OUTSIDE
    )


def designated_sides(spec: ContourSpec) -> Set[SideLabel]:
    if spec.family is Family.F1:
        sides = {SideLabel.B, SideLabel.E}
        if spec.f_signed < 0:
            sides.add(SideLabel.F)
    else:
        sides = {SideLabel.A, SideLabel.C, SideLabel.D}
        if spec.f_signed >= 0:
            sides.add(SideLabel.F)
    return sides


def build_region(spec: ContourSpec, origin: LatticePoint = (0, 0)) -> Region:
    raw = select_raw_region(spec, origin)
    designated = designated_sides(spec)
    removed: Dict[SideLabel, Set[FaceId]] = {}

    for segment in side_segments(spec, origin):
        side_removed = removed.setdefault(segment.label, set())
        squares = [square_between(h1, h2) for h1, h2 in segment.unit_steps()]
        side_removed.update(squares)
        if segment.label not in designated:
            continue
        side_removed.update(hexagon(p, q) for p, q in segment.points())
        for square in squares:
            side_removed.update(n for n in face_neighbors(square) if n.kind.is_triangle and n in raw)

    all_removed = set().union(*removed.values())
    faces = frozenset(raw - all_removed)
    region = Region(
        spec=spec,
        faces=faces,
        removed_by_side={side: frozenset(side_faces & raw) for side, side_faces in removed.items()},
        origin=origin,
    )
    black, white = balance_report(region)
    logger.debug(f"{spec}: raw={len(raw)} kept={len(faces)} black={black} white={white}")
    if black != white:
        raise UnbalancedConstruction(black, white, str(spec))
    return region


def balance_report(region: Union[Region, Iterable[FaceId]]) -> Tuple[int, int]:
    faces = region.faces if isinstance(region, Region) else region
    black = white = 0
    for face in faces:
        if face_color(face) is Color.BLACK:
            black += 1
        else:
            white += 1
    return black, white


def aztec_dragon(n: int) -> Region:
    return build_region(derive_sides(Family.F1, n, n, 0))


def half_aztec_dragon(n: int) -> Region:
    """The dragon of order n + 1/2."""
    return build_region(derive_sides(Family.F2, n + 1, n + 2, 1))
