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
Condensation identities between dragon regions.

Each identity reads  M(P1) M(P2) = M(Q1) M(Q2) + M(S1) M(S2)  for six dragon
regions whose triples are shifts of (a, b, c). They are checked by building
and counting every operand.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from src.contour import ContourSpec, Family, derive_sides, is_valid, perimeter
from src.counting import CounterKind, count
from src.dualgraph import dual_of
from src.errors import HypothesisViolation, MissingRegion
from src.region import build_region

from .kuo import IdentityReport

logger = logging.getLogger(__name__)

Operand = Tuple[Family, int, int, int]


class LemmaId(str, Enum):
    L31_F1 = "L31-F1"
    L31_F2 = "L31-F2"
    L32A_F1 = "L32a-F1"
    L32A_F2 = "L32a-F2"
    L32B_FIRST = "L32b-first"
    L32B_SECOND = "L32b-second"
    L33A_F1 = "L33a-F1"
    L33A_F2 = "L33a-F2"
    L33B_F1 = "L33b-F1"
    L33B_F2 = "L33b-F2"

    @property
    def family(self) -> Family:
        """Family of the main region (a, b, c)."""
        if self is LemmaId.L32B_FIRST or self.value.endswith("F1"):
            return Family.F1
        return Family.F2


@dataclass(frozen=True)
class LemmaOperands:
    lhs: Tuple[Operand, Operand]
    first: Tuple[Operand, Operand]
    second: Tuple[Operand, Operand]

    def all(self) -> List[Operand]:
        return [*self.lhs, *self.first, *self.second]


def _shifted(family: Family, shifts: List[Tuple[int, int, int]]) -> Callable[[int, int, int], List[Operand]]:
    def build(a: int, b: int, c: int) -> List[Operand]:
        return [(family, a + da, b + db, c + dc) for da, db, dc in shifts]

    return build


def lemma_operands(which: Union[LemmaId, str], a: int, b: int, c: int) -> LemmaOperands:
    which = LemmaId(which)
    f = which.family
    if which in (LemmaId.L31_F1, LemmaId.L31_F2):
        ops = _shifted(f, [(0, 0, 0), (-3, -3, -2), (-2, -1, 0), (-1, -2, -2), (-1, -1, -1), (-2, -2, -1)])(a, b, c)
    elif which in (LemmaId.L32A_F1, LemmaId.L32A_F2):
        ops = _shifted(f, [(0, 0, 0), (-2, -2, 0), (-1, -1, 0), (-1, -1, 0), (0, 0, 1), (-2, -2, -1)])(a, b, c)
    elif which is LemmaId.L32B_FIRST:
        ops = _shifted(f, [(0, 0, 0), (-2, -2, 0), (-1, -1, 0), (-1, -1, 0), (0, 0, 1)])(a, b, 0)
        ops.append((Family.F2, 3 * b - 2 * a + 1, 2 * b - a + 1, 1))
    elif which is LemmaId.L32B_SECOND:
        ops = _shifted(f, [(0, 0, 0), (-2, -2, 0), (-1, -1, 0), (-1, -1, 0), (0, 0, 1)])(a, b, 0)
        ops.append((Family.F1, 3 * b - 2 * a - 1, 2 * b - a - 1, 1))
    elif which in (LemmaId.L33A_F1, LemmaId.L33A_F2):
        ops = _shifted(f, [(0, 0, 0), (-2, -3, -2), (-1, -1, 0), (-1, -2, -2), (-2, -2, -1), (0, -1, -1)])(a, b, c)
    else:
        ops = _shifted(f, [(0, 0, 0), (-2, -3, -2), (-1, -2, -2), (-2, -2, -1), (0, -1, -1)])(a, b, c)
        # the reflected operand replaces (a-1, b-1, c)
        ops.insert(2, (f, c, b - 1, a - 1))
    return LemmaOperands((ops[0], ops[1]), (ops[2], ops[3]), (ops[4], ops[5]))


def lemma_hypotheses(which: Union[LemmaId, str], a: int, b: int, c: int) -> None:
    """Raise HypothesisViolation naming the first inequality that fails."""
    which = LemmaId(which)
    spec = derive_sides(which.family, a, b, c)
    context = f"{which.value}({a},{b},{c})"
    d, e = spec.d, spec.e
    checks: List[Tuple[bool, str]]
    if which in (LemmaId.L31_F1, LemmaId.L31_F2):
        checks = [(b >= 5, "b >= 5"), (c >= 2, "c >= 2"), (d >= 0, "d >= 0"), (e >= 0, "e >= 0"),
                  (a >= c + d + 1, "a >= c + d + 1")]
    elif which in (LemmaId.L32A_F1, LemmaId.L32A_F2):
        checks = [(a >= 2, "a >= 2"), (b >= 4, "b >= 4"), (c >= 1, "c >= 1"), (d >= 2, "d >= 2"), (e >= 2, "e >= 2")]
    elif which in (LemmaId.L32B_FIRST, LemmaId.L32B_SECOND):
        checks = [(c == 0, "c = 0"), (a >= 2, "a >= 2"), (b >= 4, "b >= 4"), (d >= 2, "d >= 2"), (e >= 2, "e >= 2")]
    elif which in (LemmaId.L33A_F1, LemmaId.L33A_F2):
        checks = [(a >= 2, "a >= 2"), (b >= 5, "b >= 5"), (c >= 2, "c >= 2"), (d >= 1, "d >= 1"), (e >= 0, "e >= 0"),
                  (a <= c + d, "a <= c + d")]
    else:
        checks = [(a >= 2, "a >= 2"), (b >= 5, "b >= 5"), (c >= 2, "c >= 2"), (d == 0, "d = 0"), (e >= 0, "e >= 0"),
                  (a <= c + d, "a <= c + d")]
    for ok, inequality in checks:
        if not ok:
            raise HypothesisViolation(inequality, context)


def _operand_spec(operand: Operand) -> ContourSpec:
    family, a, b, c = operand
    return derive_sides(family, a, b, c)


def operand_label(operand: Operand) -> str:
    return str(_operand_spec(operand))


def lemma_identity(
    which: Union[LemmaId, str],
    a: int,
    b: int,
    c: int,
    counter: Optional[Union[CounterKind, str]] = None,
    settings: Optional[Dict[str, Any]] = None,
) -> IdentityReport:
    lemma_hypotheses(which, a, b, c)
    operands = lemma_operands(which, a, b, c)
    for operand in operands.all():
        if not is_valid(_operand_spec(operand)):
            raise MissingRegion(f"{LemmaId(which).value}({a},{b},{c}) names invalid region {operand_label(operand)}")

    counts: Dict[Operand, int] = {}
    for operand in operands.all():
        if operand not in counts:
            graph = dual_of(build_region(_operand_spec(operand)))
            counts[operand] = count(graph, counter=counter, settings=settings).value

    def product(pair: Tuple[Operand, Operand]) -> int:
        return counts[pair[0]] * counts[pair[1]]

    report = IdentityReport(
        lhs=product(operands.lhs),
        rhs_first=product(operands.first),
        rhs_second=product(operands.second),
        operands=[operand_label(op) for op in operands.all()],
    )
    logger.debug(f"{LemmaId(which).value}({a},{b},{c}): holds={report.holds}")
    return report


def lemma_triples(
    which: Union[LemmaId, str], limit: int, max_perimeter: int
) -> List[Tuple[int, int, int]]:
    """
    In-hypothesis triples whose operands are all valid regions with
    perimeter at most max_perimeter, smallest largest-operand first.
    """
    which = LemmaId(which)
    bound = max_perimeter // 2 + 1
    found = []
    c_range = [0] if which in (LemmaId.L32B_FIRST, LemmaId.L32B_SECOND) else range(bound)
    for a in range(bound):
        for b in range(bound):
            for c in c_range:
                try:
                    lemma_hypotheses(which, a, b, c)
                except HypothesisViolation:
                    continue
                specs = [_operand_spec(op) for op in lemma_operands(which, a, b, c).all()]
                if not all(is_valid(s) for s in specs):
                    logger.warning(f"{which.value}({a},{b},{c}) passes its hypotheses but names an invalid region")
                    continue
                largest = max(perimeter(s) for s in specs)
                if largest <= max_perimeter:
                    found.append((largest, a, b, c))
    found.sort()
    return [(a, b, c) for _, a, b, c in found[:limit]]
