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

"""Machine-readable reports. Counts are decimal strings; they outgrow 64 bits quickly."""

import json
from typing import List, Optional

from pydantic import BaseModel, Field

from src.condensation import IdentityReport


class CountReport(BaseModel):
    family: int
    a: int
    b: int
    c: int
    perimeter: int
    vertices: int
    counter: str
    cross_checked: bool = False
    count: str
    formula: str
    alpha: Optional[int] = None
    beta: Optional[int] = None
    agrees: bool
    weighted: Optional[str] = Field(default=None, description="matching polynomial under the tile weighting")


class SweepEntry(BaseModel):
    family: int
    a: int
    b: int
    c: int
    perimeter: int
    count: str
    formula: str
    alpha: Optional[int] = None
    beta: Optional[int] = None
    agrees: bool


class SweepSummary(BaseModel):
    total: int = 0
    failures: int = 0


class CensusReport(BaseModel):
    f1: int
    f2: int
    f1_triples: List[List[int]] = Field(default_factory=list)
    f2_triples: List[List[int]] = Field(default_factory=list)


class SweepReport(BaseModel):
    max_perimeter: int
    entries: List[SweepEntry] = Field(default_factory=list)
    summary: SweepSummary = Field(default_factory=SweepSummary)
    census: Optional[CensusReport] = None


class IdentityResult(BaseModel):
    lhs: str
    rhs1: str
    rhs2: str
    holds: bool
    operands: List[str] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: IdentityReport) -> "IdentityResult":
        return cls(
            lhs=str(report.lhs),
            rhs1=str(report.rhs_first),
            rhs2=str(report.rhs_second),
            holds=report.holds,
            operands=list(report.operands),
        )


class SuiteReport(BaseModel):
    suite: str
    checked: int = 0
    failures: int = 0
    skipped: int = 0
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


def to_json(model: BaseModel) -> str:
    """Deterministic JSON: sorted keys, two-space indent."""
    return json.dumps(model.model_dump(), sort_keys=True, indent=2)
