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

import json
from typing import List

from pydantic import BaseModel, Field

from src.contour import Family, derive_sides
from src.errors import UnbalancedConstruction
from src.lattice import FaceId, FaceKind

from .builder import Region, balance_report


class FaceRecord(BaseModel):
    kind: str
    p: int
    q: int


class RegionDocument(BaseModel):
    family: int = Field(description="1 or 2")
    a: int
    b: int
    c: int
    faces: List[FaceRecord] = Field(default_factory=list, description="sorted by (kind, p, q)")
    black: int
    white: int


def region_document(region: Region) -> RegionDocument:
    black, white = balance_report(region)
    spec = region.spec
    return RegionDocument(
        family=int(spec.family),
        a=spec.a,
        b=spec.b,
        c=spec.c,
        faces=[FaceRecord(kind=f.kind.label, p=f.p, q=f.q) for f in region.sorted_faces()],
        black=black,
        white=white,
    )


def region_to_json(region: Region) -> str:
    return json.dumps(region_document(region).model_dump(), sort_keys=True, indent=2)


def region_from_json(text: str) -> Region:
    doc = RegionDocument.model_validate_json(text)
    faces = frozenset(FaceId(FaceKind.from_label(r.kind), r.p, r.q) for r in doc.faces)
    region = Region(spec=derive_sides(Family(doc.family), doc.a, doc.b, doc.c), faces=faces)
    black, white = balance_report(region)
    if (black, white) != (doc.black, doc.white):
        raise UnbalancedConstruction(black, white, f"document declares black={doc.black} white={doc.white}")
    return region
