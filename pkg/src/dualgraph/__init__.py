from .builders import cycle_graph, grid_graph, path_graph, single_edge
from .embedding import Face, inner_faces, trace_faces
from .graph import (
    DualGraph,
    ReductionResult,
    connected_components,
    delete_vertices,
    dual_of,
    edge_key,
    is_isomorphic,
    reduce_forced,
    tile_weighting,
    to_networkx,
    vertex_key,
)
from .textio import read_graph_text, write_graph_text

__all__ = [
    "DualGraph",
    "Face",
    "ReductionResult",
    "connected_components",
    "cycle_graph",
    "delete_vertices",
    "dual_of",
    "edge_key",
    "grid_graph",
    "inner_faces",
    "is_isomorphic",
    "path_graph",
    "read_graph_text",
    "reduce_forced",
    "single_edge",
    "tile_weighting",
    "to_networkx",
    "trace_faces",
    "vertex_key",
    "write_graph_text",
]
