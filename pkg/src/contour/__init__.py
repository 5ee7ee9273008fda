from .census import BaseCaseCensus, base_case_census, is_base_case, valid_triples
from .spec import (
    ContourSpec,
    Family,
    SideLabel,
    SideSegment,
    derive_sides,
    flip_horizontal,
    flip_over_b,
    in_theorem_domain,
    is_valid,
    perimeter,
    perimeter_closed_form,
    require_valid,
    side_segments,
    trace_contour,
)

__all__ = [
    "BaseCaseCensus",
    "ContourSpec",
    "Family",
    "SideLabel",
    "SideSegment",
    "base_case_census",
    "derive_sides",
    "flip_horizontal",
    "flip_over_b",
    "in_theorem_domain",
    "is_base_case",
    "is_valid",
    "perimeter",
    "perimeter_closed_form",
    "require_valid",
    "side_segments",
    "trace_contour",
    "valid_triples",
]
