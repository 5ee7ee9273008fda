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
Graphical condensation for planar bipartite graphs.

For u, v, w, t in cyclic order on one face, with u, w in one color class and
v, t in the other:

    M(G) M(G - {u,v,w,t}) = M(G - {u,v}) M(G - {w,t}) + M(G - {t,u}) M(G - {v,w})
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Sequence, Tuple, Union

from src.counting import CounterKind, count_with
from src.dualgraph import DualGraph, Face, delete_vertices, trace_faces, vertex_key
from src.dualgraph.graph import Vertex
from src.errors import InvalidFourPoint

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FourPoint:
    u: Vertex
    v: Vertex
    w: Vertex
    t: Vertex

    def as_tuple(self) -> Tuple[Vertex, Vertex, Vertex, Vertex]:
        return self.u, self.v, self.w, self.t

    def canonical(self) -> "FourPoint":
        """Rotation starting at the least vertex."""
        points = self.as_tuple()
        start = min(range(4), key=lambda i: vertex_key(points[i]))
        return FourPoint(*(points[(start + i) % 4] for i in range(4)))

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.as_tuple()) + ")"


@dataclass(frozen=True)
class IdentityReport:
    lhs: int
    rhs_first: int
    rhs_second: int
    operands: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs_first + self.rhs_second


def _boundary(face: Face) -> List[Vertex]:
    seen, order = set(), []
    for v in face.vertices:
        if v not in seen:
            seen.add(v)
            order.append(v)
    return order


def _in_cyclic_order(sequence: Sequence[Vertex], points: Tuple[Vertex, ...]) -> bool:
    position = {v: i for i, v in enumerate(sequence)}
    indices = [position[p] for p in points]
    start = indices.index(min(indices))
    rotated = indices[start:] + indices[:start]
    return rotated == sorted(rotated)


def _faces_through(g: DualGraph, fp: FourPoint) -> List[Face]:
    points = fp.as_tuple()
    matches = []
    for face in trace_faces(g):
        boundary = _boundary(face)
        if not set(points) <= set(boundary):
            continue
        if _in_cyclic_order(boundary, points) or _in_cyclic_order(boundary[::-1], points):
            matches.append(face)
    return matches


def validate_four_point(g: DualGraph, fp: FourPoint) -> Face:
    """Return a face carrying the four vertices in cyclic order, or raise."""
    points = fp.as_tuple()
    missing = [p for p in points if p not in g]
    if missing:
        raise InvalidFourPoint(f"not in graph: {', '.join(str(p) for p in missing)}")
    if len(set(points)) != 4:
        raise InvalidFourPoint(f"{fp} repeats a vertex")
    colors = [g.colors[p] for p in points]
    if not (colors[0] == colors[2] and colors[1] == colors[3] and colors[0] != colors[1]):
        raise InvalidFourPoint(f"{fp}: u,w and v,t must lie in opposite color classes")
    black, white = g.color_classes()
    if len(black) != len(white):
        raise InvalidFourPoint(f"color classes differ: {len(black)} black, {len(white)} white")
    faces = _faces_through(g, fp)
    if not faces:
        raise InvalidFourPoint(f"{fp} does not appear in cyclic order on any face")
    return faces[0]


def kuo_check(
    g: DualGraph, fp: FourPoint, counter: Union[CounterKind, str] = CounterKind.KASTELEYN
) -> IdentityReport:
    validate_four_point(g, fp)
    u, v, w, t = fp.as_tuple()

    def m(*removed: Vertex) -> int:
        return count_with(delete_vertices(g, removed), counter)

    report = IdentityReport(
        lhs=m() * m(u, v, w, t),
        rhs_first=m(u, v) * m(w, t),
        rhs_second=m(t, u) * m(v, w),
        operands=[
            "G",
            f"G-{{{u},{v},{w},{t}}}",
            f"G-{{{u},{v}}}",
            f"G-{{{w},{t}}}",
            f"G-{{{t},{u}}}",
            f"G-{{{v},{w}}}",
        ],
    )
    if not report.holds:
        logger.error(f"Condensation fails at {fp}: {report.lhs} != {report.rhs_first} + {report.rhs_second}")
    return report


def enumerate_four_points(g: DualGraph, face: Face, limit: Optional[int] = None) -> List[FourPoint]:
    """Colored 4-subsets of a face boundary in cyclic order, canonicalized."""
    boundary = _boundary(face)
    colors = [g.colors[v] for v in boundary]
    found: List[FourPoint] = []
    for i, j, k, l in combinations(range(len(boundary)), 4):
        if colors[i] == colors[k] and colors[j] == colors[l] and colors[i] != colors[j]:
            found.append(FourPoint(boundary[i], boundary[j], boundary[k], boundary[l]).canonical())
            if limit is not None and len(found) >= limit:
                break
    return found
