from .builder import (
    Region,
    aztec_dragon,
    balance_report,
    build_region,
    designated_sides,
    half_aztec_dragon,
    locate_point,
    select_raw_region,
)
from .export import RegionDocument, region_document, region_from_json, region_to_json
from .render import RenderStyle, render_svg

__all__ = [
    "Region",
    "RegionDocument",
    "RenderStyle",
    "aztec_dragon",
    "balance_report",
    "build_region",
    "designated_sides",
    "half_aztec_dragon",
    "locate_point",
    "region_document",
    "region_from_json",
    "region_to_json",
    "render_svg",
    "select_raw_region",
]
