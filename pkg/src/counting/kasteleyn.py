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
Pfaffian-orientation counter for planar graphs.

The graph is first reduced (forced edges, components, bridges) so that each
remaining piece is 2-edge-connected; every edge then borders two distinct
faces and the face-tree construction of the orientation applies.
"""

import logging
from enum import Enum
from math import isqrt
from typing import Dict, List, Set, Tuple

import networkx as nx
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from src.dualgraph import DualGraph, connected_components, reduce_forced, to_networkx, trace_faces, vertex_key
from src.dualgraph.graph import Vertex
from src.errors import EmbeddingInvalid, NonPerfectSquareDeterminant, NonPfaffianOrientation

logger = logging.getLogger(__name__)

Arc = Tuple[Vertex, Vertex]


class MatrixForm(str, Enum):
    BIADJACENCY = "biadjacency"
    SKEW = "skew"


def exact_determinant(rows: List[List[int]]) -> int:
    """Fraction-free determinant over the integers."""
    n = len(rows)
    if n == 0:
        return 1
    matrix = DomainMatrix([[ZZ(x) for x in row] for row in rows], (n, n), ZZ)
    return int(matrix.det())


def pfaffian_orientation(g: DualGraph) -> Set[Arc]:
    """
    Orient a connected bridgeless plane graph so every bounded face has an odd
    number of edges running clockwise.

    Spanning-tree edges are oriented arbitrarily. The remaining edges form a
    spanning tree of the dual rooted at the outer face; faces are fixed
    leaves-first, each by the one edge it shares with its parent.
    """
    if len(g) <= 1:
        return set()
    graph = to_networkx(g)
    root = g.vertices[0]
    tree_edges = {frozenset(e) for e in nx.bfs_edges(graph, root)}
    index = g.index()
    arcs: Set[Arc] = set()
    for u, v in g.edges():
        if frozenset((u, v)) in tree_edges:
            arcs.add((u, v) if index[u] < index[v] else (v, u))

    faces = trace_faces(g)
    outer = next(i for i, f in enumerate(faces) if f.outer)
    edge_faces: Dict[frozenset, List[int]] = {}
    for i, face in enumerate(faces):
        for u, v in face.darts:
            edge_faces.setdefault(frozenset((u, v)), []).append(i)

    dual = nx.Graph()
    dual.add_nodes_from(range(len(faces)))
    for edge, owners in edge_faces.items():
        if edge in tree_edges:
            continue
        if len(owners) != 2 or owners[0] == owners[1]:
            raise EmbeddingInvalid(f"edge {set(edge)} does not separate two faces")
        dual.add_edge(owners[0], owners[1], edge=edge)
    if not nx.is_tree(dual):
        raise EmbeddingInvalid("non-tree edges do not form a dual spanning tree")

    parent_edge: Dict[int, frozenset] = {}
    for parent, child in nx.bfs_edges(dual, outer):
        parent_edge[child] = dual.edges[parent, child]["edge"]

    for face_index in reversed(list(nx.dfs_preorder_nodes(dual, outer))):
        if face_index == outer:
            continue
        face = faces[face_index]
        pending = parent_edge[face_index]
        clockwise = 0
        pending_dart = None
        for u, v in face.darts:
            if frozenset((u, v)) == pending:
                pending_dart = (u, v)
            elif (v, u) in arcs:
                clockwise += 1
        u, v = pending_dart
        arcs.add((v, u) if clockwise % 2 == 0 else (u, v))
    return arcs


def check_pfaffian_orientation(g: DualGraph, arcs: Set[Arc]) -> None:
    """Every bounded face must have an odd number of clockwise arcs."""
    for face in trace_faces(g):
        if face.outer:
            continue
        # faces are traced counterclockwise, so (v, u) runs clockwise
        clockwise = sum(1 for u, v in face.darts if (v, u) in arcs)
        if clockwise % 2 == 0:
            raise NonPfaffianOrientation(len(face), clockwise)


def skew_matrix(g: DualGraph, arcs: Set[Arc]) -> List[List[int]]:
    index = g.index()
    rows = [[0] * len(g) for _ in g.vertices]
    for u, v in arcs:
        rows[index[u]][index[v]] = 1
        rows[index[v]][index[u]] = -1
    return rows


def abs_pfaffian(rows: List[List[int]]) -> int:
    """|Pf| of a skew matrix as the square root of its determinant."""
    det = exact_determinant(rows)
    root = isqrt(det) if det >= 0 else -1
    if root < 0 or root * root != det:
        raise NonPerfectSquareDeterminant(det)
    return root


def _pfaffian_count(g: DualGraph, form: MatrixForm) -> int:
    arcs = pfaffian_orientation(g)
    check_pfaffian_orientation(g, arcs)
    if form is MatrixForm.BIADJACENCY:
        black, white = g.color_classes()
        if len(black) != len(white):
            return 0
        column = {v: j for j, v in enumerate(white)}
        rows = [[0] * len(white) for _ in black]
        for i, b in enumerate(black):
            for w in g.adjacency[b]:
                rows[i][column[w]] = 1 if (b, w) in arcs else -1
        value = abs(exact_determinant(rows))
        logger.debug(f"Biadjacency determinant on {len(black)}x{len(white)}: {value}")
        return value

    value = abs_pfaffian(skew_matrix(g, arcs))
    logger.debug(f"Skew Pfaffian on {len(g)} vertices: {value}")
    return value


def _count(g: DualGraph, form: MatrixForm) -> int:
    result = reduce_forced(g)
    if not result.feasible:
        return 0
    g = result.reduced
    if len(g) == 0:
        return 1
    if len(g) % 2:
        return 0

    components = connected_components(g)
    if len(components) > 1:
        total = 1
        for component in components:
            total *= _count(g.induced(component), form)
            if total == 0:
                return 0
        return total

    graph = to_networkx(g)
    bridge = min(nx.bridges(graph), key=lambda e: sorted(map(vertex_key, e)), default=None)
    if bridge is not None:
        u, v = bridge
        graph.remove_edge(u, v)
        side = nx.node_connected_component(graph, u)
        if len(side) % 2:
            # the bridge is in every matching
            return _count(g.induced(x for x in g.vertices if x not in (u, v)), form)
        return _count(g.without_edge(u, v), form)

    return _pfaffian_count(g, form)


def count_kasteleyn(g: DualGraph, form: MatrixForm = MatrixForm.SKEW) -> int:
    """Number of perfect matchings via a Pfaffian orientation of the embedding."""
    return _count(g, MatrixForm(form))
