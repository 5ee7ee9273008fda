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

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Set, Tuple

from src.errors import EmbeddingInvalid

from .graph import DualGraph, Vertex, connected_components

logger = logging.getLogger(__name__)

Dart = Tuple[Vertex, Vertex]


@dataclass(frozen=True)
class Face:
    darts: Tuple[Dart, ...]
    double_area: Fraction
    outer: bool

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return tuple(u for u, _ in self.darts)

    def __len__(self) -> int:
        return len(self.darts)


def _next_dart(g: DualGraph, positions: Dict[Vertex, Dict[Vertex, int]], dart: Dart) -> Dart:
    u, v = dart
    rotation = g.adjacency[v]
    return v, rotation[positions[v][u] - 1]


def _double_area(g: DualGraph, darts: List[Dart]) -> Fraction:
    total = Fraction(0)
    for u, v in darts:
        (x1, y1), (x2, y2) = g.positions[u], g.positions[v]
        total += x1 * y2 - x2 * y1
    return total


def trace_faces(g: DualGraph) -> List[Face]:
    """
    Walk every face of the rotation system.

    Bounded faces come out counterclockwise. Each connected component with
    at least one edge contributes exactly one outer face, the one of least
    signed area.
    """
    positions = {v: {u: i for i, u in enumerate(g.adjacency[v])} for v in g.vertices}
    faces: List[Face] = []

    for component in connected_components(g):
        darts_left: Set[Dart] = {(u, v) for u in component for v in g.adjacency[u]}
        if not darts_left:
            continue
        edge_total = len(darts_left) // 2
        walks: List[Tuple[Tuple[Dart, ...], Fraction]] = []
        for u in component:
            for v in g.adjacency[u]:
                start = (u, v)
                if start not in darts_left:
                    continue
                walk = [start]
                darts_left.discard(start)
                dart = _next_dart(g, positions, start)
                while dart != start:
                    if dart not in darts_left:
                        raise EmbeddingInvalid(f"face walk from {u}->{v} revisits {dart[0]}->{dart[1]}")
                    walk.append(dart)
                    darts_left.discard(dart)
                    dart = _next_dart(g, positions, dart)
                walks.append((tuple(walk), _double_area(g, walk)))

        if len(component) - edge_total + len(walks) != 2:
            raise EmbeddingInvalid(
                f"component at {component[0]}: V={len(component)} E={edge_total} F={len(walks)} is not planar"
            )
        outer_index = min(range(len(walks)), key=lambda i: walks[i][1])
        faces.extend(Face(darts, area, i == outer_index) for i, (darts, area) in enumerate(walks))

    logger.debug(f"Traced {len(faces)} faces on {len(g)} vertices")
    return faces


def inner_faces(g: DualGraph) -> List[Face]:
    return [f for f in trace_faces(g) if not f.outer]
