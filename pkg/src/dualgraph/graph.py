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
Planar bipartite graphs with a combinatorial embedding.

Vertices are region faces (`FaceId`) or, for synthetic test graphs, integer
tuples. Every vertex carries a color and an exact position in affine lattice
coordinates; the counterclockwise neighbor order is derived from positions.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Set, Tuple

import networkx as nx

from src.errors import UnknownVertex
from src.lattice import Color, FaceId, ccw_sorted, face_anchor, face_color, face_neighbors

logger = logging.getLogger(__name__)

Vertex = Hashable
Edge = FrozenSet[Vertex]
RationalPoint = Tuple[Fraction, Fraction]


def vertex_key(v: Vertex):
    """Total order on vertices: faces by (kind, p, q), then synthetic tuples."""
    if isinstance(v, FaceId):
        return (0, int(v.kind), v.p, v.q)
    return (1,) + tuple(v)


def edge_key(u: Vertex, v: Vertex) -> Edge:
    return frozenset((u, v))


@dataclass(frozen=True, eq=False)
class DualGraph:
    vertices: Tuple[Vertex, ...]
    colors: Mapping[Vertex, Color]
    positions: Mapping[Vertex, RationalPoint]
    adjacency: Mapping[Vertex, Tuple[Vertex, ...]]
    weight_exps: Mapping[Edge, int] = field(default_factory=dict)

    @classmethod
    def build(
        cls,
        colors: Mapping[Vertex, Color],
        positions: Mapping[Vertex, RationalPoint],
        edges: Iterable[Tuple[Vertex, Vertex]],
        weight_exps: Optional[Mapping[Edge, int]] = None,
    ) -> "DualGraph":
        """Graph from an edge list; ccw neighbor orders come from the positions."""
        neighbors: Dict[Vertex, Set[Vertex]] = {v: set() for v in colors}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if colors[u] == colors[v]:
                raise ValueError(f"edge {u}-{v} joins two {colors[u].name} vertices")
            neighbors[u].add(v)
            neighbors[v].add(u)
        ordered = sorted(colors, key=vertex_key)
        adjacency = {
            v: tuple(ccw_sorted(positions[v], neighbors[v], lambda x: positions[x])) for v in ordered
        }
        exps = {e: k for e, k in (weight_exps or {}).items() if k}
        return cls(tuple(ordered), dict(colors), dict(positions), adjacency, exps)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: Vertex) -> bool:
        return v in self.adjacency

    def degree(self, v: Vertex) -> int:
        return len(self.adjacency[v])

    def weight_exp(self, u: Vertex, v: Vertex) -> int:
        return self.weight_exps.get(edge_key(u, v), 0)

    def edges(self) -> List[Tuple[Vertex, Vertex]]:
        index = self.index()
        found = []
        for u in self.vertices:
            for v in self.adjacency[u]:
                if index[u] < index[v]:
                    found.append((u, v))
        return found

    def edge_count(self) -> int:
        return sum(len(n) for n in self.adjacency.values()) // 2

    def index(self) -> Dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def color_classes(self) -> Tuple[List[Vertex], List[Vertex]]:
        black = [v for v in self.vertices if self.colors[v] is Color.BLACK]
        white = [v for v in self.vertices if self.colors[v] is Color.WHITE]
        return black, white

    def induced(self, keep: Iterable[Vertex]) -> "DualGraph":
        keep_set = set(keep)
        vertices = tuple(v for v in self.vertices if v in keep_set)
        adjacency = {v: tuple(u for u in self.adjacency[v] if u in keep_set) for v in vertices}
        exps = {e: k for e, k in self.weight_exps.items() if e <= keep_set}
        return DualGraph(
            vertices,
            {v: self.colors[v] for v in vertices},
            {v: self.positions[v] for v in vertices},
            adjacency,
            exps,
        )

    def without_edge(self, u: Vertex, v: Vertex) -> "DualGraph":
        adjacency = dict(self.adjacency)
        adjacency[u] = tuple(x for x in adjacency[u] if x != v)
        adjacency[v] = tuple(x for x in adjacency[v] if x != u)
        exps = {e: k for e, k in self.weight_exps.items() if e != edge_key(u, v)}
        return DualGraph(self.vertices, self.colors, self.positions, adjacency, exps)

    def with_weights(self, weight_exps: Mapping[Edge, int]) -> "DualGraph":
        exps = {e: k for e, k in weight_exps.items() if k}
        return DualGraph(self.vertices, self.colors, self.positions, self.adjacency, exps)


@dataclass(frozen=True)
class ReductionResult:
    reduced: DualGraph
    forced_weight_exp: int
    feasible: bool
    forced_edges: Tuple[Tuple[Vertex, Vertex], ...] = ()


def dual_of(region) -> DualGraph:
    """One vertex per face, one edge per shared lattice edge."""
    faces = region.faces if hasattr(region, "faces") else frozenset(region)
    ordered = sorted(faces, key=vertex_key)
    adjacency = {f: tuple(n for n in face_neighbors(f) if n in faces) for f in ordered}
    graph = DualGraph(
        tuple(ordered),
        {f: face_color(f) for f in ordered},
        {f: face_anchor(f) for f in ordered},
        adjacency,
    )
    logger.debug(f"Dual graph: {len(graph)} vertices, {graph.edge_count()} edges")
    return graph


def delete_vertices(g: DualGraph, removed: Iterable[Vertex]) -> DualGraph:
    removed_set = set(removed)
    unknown = [v for v in removed_set if v not in g]
    if unknown:
        raise UnknownVertex(f"not in graph: {', '.join(str(v) for v in sorted(unknown, key=vertex_key))}")
    return g.induced(v for v in g.vertices if v not in removed_set)


def reduce_forced(g: DualGraph) -> ReductionResult:
    """Strip edges at degree-one vertices until none remain; an isolated vertex means no matching."""
    adjacency: Dict[Vertex, Set[Vertex]] = {v: set(g.adjacency[v]) for v in g.vertices}
    stack = [v for v in reversed(g.vertices) if len(adjacency[v]) <= 1]
    forced: List[Tuple[Vertex, Vertex]] = []
    exponent = 0

    def drop(x: Vertex) -> None:
        for y in adjacency.pop(x):
            adjacency[y].discard(x)
            if len(adjacency[y]) <= 1:
                stack.append(y)

    while stack:
        v = stack.pop()
        if v not in adjacency:
            continue
        if not adjacency[v]:
            remaining = g.induced(adjacency)
            return ReductionResult(remaining, exponent, False, tuple(forced))
        if len(adjacency[v]) == 1:
            (u,) = adjacency[v]
            forced.append((v, u))
            exponent += g.weight_exp(u, v)
            drop(v)
            drop(u)

    return ReductionResult(g.induced(adjacency), exponent, True, tuple(forced))


def to_networkx(g: DualGraph) -> nx.Graph:
    graph = nx.Graph()
    for v in g.vertices:
        graph.add_node(v, color=g.colors[v].value)
    for u, v in g.edges():
        graph.add_edge(u, v, weight=g.weight_exp(u, v))
    return graph


def connected_components(g: DualGraph) -> List[List[Vertex]]:
    graph = to_networkx(g)
    components = [sorted(c, key=vertex_key) for c in nx.connected_components(graph)]
    return sorted(components, key=lambda c: vertex_key(c[0]))


def is_isomorphic(g: DualGraph, h: DualGraph) -> bool:
    """Color-preserving graph isomorphism."""
    if len(g) != len(h) or g.edge_count() != h.edge_count():
        return False
    return nx.vf2pp_is_isomorphic(to_networkx(g), to_networkx(h), node_label="color")


def tile_weighting(g: DualGraph) -> DualGraph:
    """Weight x on square-triangle tiles; square-hexagon tiles keep weight 1."""
    exps = {}
    for u, v in g.edges():
        if isinstance(u, FaceId) and isinstance(v, FaceId) and (u.kind.is_triangle or v.kind.is_triangle):
            exps[edge_key(u, v)] = 1
    return g.with_weights(exps)
