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
The recurrence system satisfied by Phi and Psi.

Each recurrence has the shape  L1*L2 = R1*R2 + S1*S2  where every factor is
one of two functions (star, diamond) at a shifted triple. R3 is split in two
because its halves mix the functions in opposite ways; all other recurrences
use a single function for every factor.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Tuple, Union

from .closed_forms import phi_value, psi_value

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]
Shift = Callable[[int, int, int], Triple]


class RecurrenceId(str, Enum):
    R1 = "R1"
    R2 = "R2"
    R3_FIRST = "R3first"
    R3_SECOND = "R3second"
    R4 = "R4"
    R5 = "R5"


class FunctionPair(str, Enum):
    PHI = "phi"
    PSI = "psi"
    MIXED = "mixed"


STAR, DIAMOND = "star", "diamond"


@dataclass(frozen=True)
class Factor:
    function: str
    shift: Shift


@dataclass(frozen=True)
class Recurrence:
    lhs: Tuple[Factor, Factor]
    first: Tuple[Factor, Factor]
    second: Tuple[Factor, Factor]


def _s(shift: Shift) -> Factor:
    return Factor(STAR, shift)


def _d(shift: Shift) -> Factor:
    return Factor(DIAMOND, shift)


RECURRENCES: Dict[RecurrenceId, Recurrence] = {
    RecurrenceId.R1: Recurrence(
        (_s(lambda a, b, c: (a, b, c)), _s(lambda a, b, c: (a - 3, b - 3, c - 2))),
        (_s(lambda a, b, c: (a - 2, b - 1, c)), _s(lambda a, b, c: (a - 1, b - 2, c - 2))),
        (_s(lambda a, b, c: (a - 1, b - 1, c - 1)), _s(lambda a, b, c: (a - 2, b - 2, c - 1))),
    ),
    RecurrenceId.R2: Recurrence(
        (_s(lambda a, b, c: (a, b, c)), _s(lambda a, b, c: (a - 2, b - 2, c))),
        (_s(lambda a, b, c: (a - 1, b - 1, c)), _s(lambda a, b, c: (a - 1, b - 1, c))),
        (_s(lambda a, b, c: (a, b, c + 1)), _s(lambda a, b, c: (a - 2, b - 2, c - 1))),
    ),
    # R3 lives on c = 0; the third coordinate of the input is ignored
    RecurrenceId.R3_FIRST: Recurrence(
        (_s(lambda a, b, c: (a, b, 0)), _s(lambda a, b, c: (a - 2, b - 2, 0))),
        (_s(lambda a, b, c: (a - 1, b - 1, 0)), _s(lambda a, b, c: (a - 1, b - 1, 0))),
        (_s(lambda a, b, c: (a, b, 1)), _d(lambda a, b, c: (3 * b - 2 * a + 1, 2 * b - a + 1, 1))),
    ),
    RecurrenceId.R3_SECOND: Recurrence(
        (_d(lambda a, b, c: (a, b, 0)), _d(lambda a, b, c: (a - 2, b - 2, 0))),
        (_d(lambda a, b, c: (a - 1, b - 1, 0)), _d(lambda a, b, c: (a - 1, b - 1, 0))),
        (_d(lambda a, b, c: (a, b, 1)), _s(lambda a, b, c: (3 * b - 2 * a - 1, 2 * b - a - 1, 1))),
    ),
    RecurrenceId.R4: Recurrence(
        (_s(lambda a, b, c: (a, b, c)), _s(lambda a, b, c: (a - 2, b - 3, c - 2))),
        (_s(lambda a, b, c: (a - 1, b - 1, c)), _s(lambda a, b, c: (a - 1, b - 2, c - 2))),
        (_s(lambda a, b, c: (a - 2, b - 2, c - 1)), _s(lambda a, b, c: (a, b - 1, c - 1))),
    ),
    RecurrenceId.R5: Recurrence(
        (_s(lambda a, b, c: (a, b, c)), _s(lambda a, b, c: (a - 2, b - 3, c - 2))),
        (_s(lambda a, b, c: (c, b - 1, a - 1)), _s(lambda a, b, c: (a - 1, b - 2, c - 2))),
        (_s(lambda a, b, c: (a - 2, b - 2, c - 1)), _s(lambda a, b, c: (a, b - 1, c - 1))),
    ),
}

_MIXED_ONLY = (RecurrenceId.R3_FIRST, RecurrenceId.R3_SECOND)


def recurrence_pairs(recurrence: Union[RecurrenceId, str]) -> List[FunctionPair]:
    """The function assignments under which a recurrence is claimed."""
    if RecurrenceId(recurrence) in _MIXED_ONLY:
        return [FunctionPair.MIXED]
    return [FunctionPair.PHI, FunctionPair.PSI]


def _functions(pair: FunctionPair) -> Dict[str, Callable[[int, int, int], Fraction]]:
    if pair is FunctionPair.MIXED:
        return {STAR: phi_value, DIAMOND: psi_value}
    value = phi_value if pair is FunctionPair.PHI else psi_value
    return {STAR: value, DIAMOND: value}


@dataclass(frozen=True)
class RecurrenceCheck:
    recurrence: RecurrenceId
    pair: FunctionPair
    triple: Triple
    lhs: Fraction
    first: Fraction
    second: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.first + self.second


def evaluate_recurrence(
    recurrence: Union[RecurrenceId, str], pair: Union[FunctionPair, str], a: int, b: int, c: int
) -> RecurrenceCheck:
    recurrence, pair = RecurrenceId(recurrence), FunctionPair(pair)
    if pair not in recurrence_pairs(recurrence):
        raise ValueError(f"{recurrence.value} is not stated for the {pair.value} pair")
    functions = _functions(pair)

    def product(factors: Tuple[Factor, Factor]) -> Fraction:
        total = Fraction(1)
        for factor in factors:
            total *= functions[factor.function](*factor.shift(a, b, c))
        return total

    spec = RECURRENCES[recurrence]
    return RecurrenceCheck(recurrence, pair, (a, b, c), product(spec.lhs), product(spec.first), product(spec.second))


def check_recurrence(
    recurrence: Union[RecurrenceId, str], pair: Union[FunctionPair, str], a: int, b: int, c: int
) -> bool:
    """True iff the recurrence holds exactly at (a, b, c)."""
    return evaluate_recurrence(recurrence, pair, a, b, c).holds


def recurrence_counterexamples(grid: int) -> List[RecurrenceCheck]:
    """Every failing (recurrence, pair, triple) with coordinates in [-grid, grid]."""
    failures = []
    span = range(-grid, grid + 1)
    for recurrence in RecurrenceId:
        for pair in recurrence_pairs(recurrence):
            for a in span:
                for b in span:
                    for c in span:
                        check = evaluate_recurrence(recurrence, pair, a, b, c)
                        if not check.holds:
                            failures.append(check)
    logger.debug(f"Recurrence grid {grid}: {len(failures)} failures")
    return failures
