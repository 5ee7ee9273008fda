from .faces import (
    Color,
    FaceId,
    FaceKind,
    ccw_sorted,
    face_anchor,
    face_color,
    face_neighbors,
    hexagon,
    square_between,
    square_hexagons,
    triangle_hexagons,
)
from .geometry import (
    LATTICE_EDGE,
    face_centroid,
    face_polygon,
    face_polygon_float,
    polygon_area,
    to_euclidean,
    to_float,
)

__all__ = [
    "Color",
    "FaceId",
    "FaceKind",
    "LATTICE_EDGE",
    "ccw_sorted",
    "face_anchor",
    "face_centroid",
    "face_color",
    "face_neighbors",
    "face_polygon",
    "face_polygon_float",
    "hexagon",
    "polygon_area",
    "square_between",
    "square_hexagons",
    "triangle_hexagons",
    "to_euclidean",
    "to_float",
]
