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
Line-oriented `mg` graph format.

    mg <n> <m>
    v <idx> <B|W> <kind> <p> <q> <cx> <cy>
    e <i> <j> <weight-exponent>

Vertex lines come in vertex order, edge lines sorted by (i, j) with i < j.
Positions are affine lattice coordinates written as `num/den`. Synthetic
vertices use kind `Node` with their two integer coordinates as p and q.
"""

from fractions import Fraction
from typing import Dict, List, Tuple

from src.errors import GraphFormatError
from src.lattice import Color, FaceId, FaceKind, face_color

from .graph import DualGraph, Vertex, edge_key

SYNTHETIC_KIND = "Node"


def _rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def write_graph_text(g: DualGraph) -> str:
    index = g.index()
    edges = sorted((index[u], index[v], g.weight_exp(u, v)) for u, v in g.edges())
    lines = [f"mg {len(g)} {len(edges)}"]
    for i, v in enumerate(g.vertices):
        if isinstance(v, FaceId):
            kind, p, q = v.kind.label, v.p, v.q
        else:
            kind, (p, q) = SYNTHETIC_KIND, v
        cx, cy = g.positions[v]
        lines.append(f"v {i} {g.colors[v].value} {kind} {p} {q} {_rational(cx)} {_rational(cy)}")
    for i, j, w in edges:
        lines.append(f"e {i} {j} {w}")
    return "\n".join(lines) + "\n"


def _parse_vertex(fields: List[str], line_no: int) -> Tuple[int, Vertex, Color, Tuple[Fraction, Fraction]]:
    if len(fields) != 8:
        raise GraphFormatError(f"line {line_no}: vertex line needs 8 fields, got {len(fields)}")
    try:
        idx, p, q = int(fields[1]), int(fields[4]), int(fields[5])
        color = Color(fields[2])
        position = (Fraction(fields[6]), Fraction(fields[7]))
    except ValueError as exc:
        raise GraphFormatError(f"line {line_no}: {exc}") from exc
    if fields[3] == SYNTHETIC_KIND:
        vertex: Vertex = (p, q)
    else:
        try:
            vertex = FaceId(FaceKind.from_label(fields[3]), p, q)
        except (KeyError, ValueError) as exc:
            raise GraphFormatError(f"line {line_no}: unknown face kind {fields[3]!r}") from exc
        if face_color(vertex) is not color:
            raise GraphFormatError(f"line {line_no}: {vertex} cannot be {color.name}")
    return idx, vertex, color, position


def read_graph_text(text: str) -> DualGraph:
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines or lines[0][0] != "mg" or len(lines[0]) != 3:
        raise GraphFormatError("missing `mg <n> <m>` header")
    try:
        n, m = int(lines[0][1]), int(lines[0][2])
    except ValueError as exc:
        raise GraphFormatError(f"bad header: {exc}") from exc
    if len(lines) != 1 + n + m:
        raise GraphFormatError(f"header declares {n} vertices and {m} edges, found {len(lines) - 1} lines")

    by_index: Dict[int, Vertex] = {}
    colors: Dict[Vertex, Color] = {}
    positions: Dict[Vertex, Tuple[Fraction, Fraction]] = {}
    for offset, fields in enumerate(lines[1 : n + 1], start=2):
        if fields[0] != "v":
            raise GraphFormatError(f"line {offset}: expected a vertex line")
        idx, vertex, color, position = _parse_vertex(fields, offset)
        if idx != offset - 2 or vertex in colors:
            raise GraphFormatError(f"line {offset}: vertex index {idx} out of order or duplicated")
        by_index[idx] = vertex
        colors[vertex] = color
        positions[vertex] = position

    edges = []
    weights = {}
    for offset, fields in enumerate(lines[n + 1 :], start=n + 2):
        if fields[0] != "e" or len(fields) != 4:
            raise GraphFormatError(f"line {offset}: expected `e <i> <j> <w>`")
        try:
            i, j, w = int(fields[1]), int(fields[2]), int(fields[3])
            u, v = by_index[i], by_index[j]
        except (ValueError, KeyError) as exc:
            raise GraphFormatError(f"line {offset}: bad edge {fields[1:]}") from exc
        edges.append((u, v))
        weights[edge_key(u, v)] = w

    try:
        return DualGraph.build(colors, positions, edges, weights)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc
