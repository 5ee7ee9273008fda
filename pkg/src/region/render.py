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
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple

from lxml import etree

from src.config import load_settings
from src.contour import side_segments
from src.lattice import Color, face_color, face_polygon_float, to_euclidean, to_float

from .builder import Region

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"


@dataclass(frozen=True)
class RenderStyle:
    scale: float = 40.0
    margin: float = 1.0
    square_fill: str = "#3b3b3b"
    light_fill: str = "#f2efe6"
    stroke: str = "#555555"
    stroke_width: float = 0.02
    contour_stroke: str = "#c0392b"
    contour_width: float = 0.05
    dash: str = "0.15,0.1"
    font_size: float = 0.4

    @classmethod
    def from_settings(cls, settings: Optional[Dict[str, Any]] = None) -> "RenderStyle":
        settings = settings or load_settings()
        render_cfg = settings.get("render", {})
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in render_cfg.items() if k in known})


def _fmt(value: float) -> str:
    text = f"{value:.4f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _lattice_point(point: Tuple[int, int]) -> Tuple[float, float]:
    return to_float(to_euclidean((Fraction(point[0]), Fraction(point[1]))))


def _points_attr(points: Iterable[Tuple[float, float]]) -> str:
    # SVG y grows downward
    return " ".join(f"{_fmt(x)},{_fmt(-y)}" for x, y in points)


def _bounds(points: List[Tuple[float, float]]) -> Tuple[float, float, float, float]:
    xs = [x for x, _ in points]
    ys = [-y for _, y in points]
    return min(xs), min(ys), max(xs), max(ys)


def render_svg(region: Region, style: Optional[RenderStyle] = None) -> str:
    """Draw faces, the dashed contour and the side labels; output is deterministic."""
    style = style or RenderStyle.from_settings()
    segments = side_segments(region.spec, region.origin)
    contour = [_lattice_point(s.start) for s in segments] + [_lattice_point(segments[-1].end)]

    polygons = [(face, face_polygon_float(face)) for face in region.sorted_faces()]
    every_point = list(contour) + [pt for _, poly in polygons for pt in poly]
    min_x, min_y, max_x, max_y = _bounds(every_point)
    m = style.margin
    view = (min_x - m, min_y - m, max_x - min_x + 2 * m, max_y - min_y + 2 * m)

    root = etree.Element(f"{{{SVG_NS}}}svg", nsmap={None: SVG_NS})
    root.set("viewBox", " ".join(_fmt(v) for v in view))
    root.set("width", _fmt(view[2] * style.scale))
    root.set("height", _fmt(view[3] * style.scale))

    title = etree.SubElement(root, f"{{{SVG_NS}}}title")
    title.text = str(region.spec)

    faces_group = etree.SubElement(root, f"{{{SVG_NS}}}g", id="faces")
    faces_group.set("stroke", style.stroke)
    faces_group.set("stroke-width", _fmt(style.stroke_width))
    for face, polygon in polygons:
        fill = style.square_fill if face_color(face) is Color.BLACK else style.light_fill
        node = etree.SubElement(faces_group, f"{{{SVG_NS}}}polygon")
        node.set("points", _points_attr(polygon))
        node.set("fill", fill)
        node.set("data-face", str(face))

    outline = etree.SubElement(root, f"{{{SVG_NS}}}polyline", id="contour")
    outline.set("points", _points_attr(contour))
    outline.set("fill", "none")
    outline.set("stroke", style.contour_stroke)
    outline.set("stroke-width", _fmt(style.contour_width))
    outline.set("stroke-dasharray", style.dash)

    labels = etree.SubElement(root, f"{{{SVG_NS}}}g", id="side-labels")
    labels.set("font-size", _fmt(style.font_size))
    labels.set("text-anchor", "middle")
    for segment in segments:
        (x1, y1), (x2, y2) = _lattice_point(segment.start), _lattice_point(segment.end)
        text = etree.SubElement(labels, f"{{{SVG_NS}}}text")
        text.set("x", _fmt((x1 + x2) / 2))
        text.set("y", _fmt(-(y1 + y2) / 2))
        text.text = f"{segment.label.value}={segment.length}"

    logger.debug(f"Rendered {region.spec}: {len(polygons)} faces")
    return etree.tostring(root, pretty_print=True, xml_declaration=True, encoding="UTF-8").decode("utf-8")
