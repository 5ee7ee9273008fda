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

"""Shape checks for the merged settings sections the counters and suites read."""

from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, field_validator


class CountingSection(BaseModel):
    model_config = ConfigDict(extra="allow")

    counter: Literal["kasteleyn", "brute"] = "kasteleyn"
    cross_check_max_vertices: int = Field(40, ge=0)


class SweepSection(BaseModel):
    model_config = ConfigDict(extra="allow")

    max_perimeter: int = Field(19, ge=7)
    families: List[Literal[1, 2]] = [1, 2]
    jobs: PositiveInt = 1

    @field_validator("max_perimeter")
    @classmethod
    def _odd(cls, value: int) -> int:
        if value % 2 == 0:
            raise ValueError(f"dragon perimeters are odd, got {value}")
        return value


class IdentitiesSection(BaseModel):
    model_config = ConfigDict(extra="allow")

    grid: int = Field(10, ge=0)
    weighted_grid: int = Field(12, ge=0)
    flip_grid: int = Field(12, ge=0)
    needle_grid: int = Field(10, ge=0)
    lemma_triples: int = Field(20, ge=0)
    lemma_max_perimeter: int = Field(60, ge=7)


class KuoSection(BaseModel):
    model_config = ConfigDict(extra="allow")

    max_perimeter: int = Field(15, ge=0)
    max_four_points_per_face: Optional[PositiveInt] = None
    grids: List[Tuple[PositiveInt, PositiveInt]] = []
    cycles: List[int] = []

    @field_validator("cycles")
    @classmethod
    def _even_cycles(cls, value: List[int]) -> List[int]:
        bad = [n for n in value if n < 4 or n % 2]
        if bad:
            raise ValueError(f"cycle lengths must be even and at least 4, got {bad}")
        return value


class DragonSettings(BaseModel):
    model_config = ConfigDict(extra="allow")

    counting: CountingSection = CountingSection()
    sweep: SweepSection = SweepSection()
    identities: IdentitiesSection = IdentitiesSection()
    kuo: KuoSection = KuoSection()


def validate_settings(settings: Dict[str, Any]) -> DragonSettings:
    """Raise pydantic's ValidationError (a ValueError) on a malformed section."""
    return DragonSettings.model_validate(settings)
