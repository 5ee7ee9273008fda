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

from dataclasses import dataclass
from typing import Dict, Iterable, List

from .spec import ContourSpec, Family, derive_sides, in_theorem_domain, is_valid, perimeter

# every side of a closed contour is at most half the perimeter
_CENSUS_BOUND = 20
_BASE_CASE_PERIMETER = 15
_SMALL_B = {Family.F1: 4, Family.F2: 3}


def valid_triples(
    family: Family, max_perimeter: int, theorem_domain: bool = True
) -> List[ContourSpec]:
    """All valid contours of a family with perimeter <= max_perimeter, sorted by (perimeter, a, b, c)."""
    accept = in_theorem_domain if theorem_domain else is_valid
    bound = max_perimeter // 2
    found = []
    for a in range(bound + 1):
        for b in range(1, bound + 1):
            for c in range(bound + 1):
                spec = derive_sides(family, a, b, c)
                if accept(spec) and perimeter(spec) <= max_perimeter:
                    found.append(spec)
    return sorted(found, key=lambda s: (perimeter(s), s.a, s.b, s.c))


def is_base_case(spec: ContourSpec) -> bool:
    if not in_theorem_domain(spec):
        return False
    return (
        perimeter(spec) <= _BASE_CASE_PERIMETER
        or spec.b <= _SMALL_B[spec.family]
        or spec.c + spec.d <= 2
    )


@dataclass(frozen=True)
class BaseCaseCensus:
    triples: Dict[Family, List[ContourSpec]]

    def count(self, family: Family) -> int:
        return len(self.triples[family])


def _candidates(family: Family) -> Iterable[ContourSpec]:
    for a in range(_CENSUS_BOUND):
        for b in range(_CENSUS_BOUND):
            for c in range(_CENSUS_BOUND):
                yield derive_sides(family, a, b, c)


def base_case_census() -> BaseCaseCensus:
    """Triples handled directly rather than by the recurrences: 53 for F1, 28 for F2."""
    triples = {
        family: sorted((s for s in _candidates(family) if is_base_case(s)), key=lambda s: s.triple)
        for family in Family
    }
    return BaseCaseCensus(triples)
