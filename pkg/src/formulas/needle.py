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

"""Tiling counts of the needle regions on the modified triangular lattice."""

from typing import Union

from src.errors import HypothesisViolation, NonIntegerExponent

from .closed_forms import Exponents, FormulaId, integer_value


def check_needle_hypotheses(a: int, b: int, c: int, context: str) -> None:
    if a < 0:
        raise HypothesisViolation("a >= 0", context)
    if c < 0:
        raise HypothesisViolation("c >= 0", context)
    if b < 2:
        raise HypothesisViolation("b >= 2", context)
    if 2 * b - a - 2 * c < 0:
        raise HypothesisViolation("2b-a-2c >= 0", context)
    if 3 * b - 2 * a - 2 * c < 0:
        raise HypothesisViolation("3b-2a-2c >= 0", context)


def needle_exp(which: Union[FormulaId, str], a: int, b: int, c: int) -> Exponents:
    which = FormulaId(which)
    if which not in (FormulaId.N1, FormulaId.N2):
        raise ValueError(f"{which.value} is not a needle formula")
    # c and 2a-2b+c share parity, so this is integral for integer input
    half_twice = c - abs(2 * a - 2 * b + c)
    if half_twice % 2:
        raise NonIntegerExponent(f"({half_twice})/2 in the 2-exponent of {which.value}({a},{b},{c})")
    e2 = a * a - 3 * a * b + 3 * b * b - 3 * b * c + c * c + a * c + a - b + half_twice // 2

    s = a - b + c
    twice_e3 = (5 * a - 7 * b + 5 * c + 1) * s
    if twice_e3 % 2:
        raise NonIntegerExponent(f"({twice_e3})/2 in the 3-exponent of {which.value}({a},{b},{c})")
    e3 = twice_e3 // 2 + b * (b - 1) - a * c
    if which is FormulaId.N2:
        e3 += (b - a) + min(2 * a - 2 * b + c, 0)
    return e2, e3


def needle_formula(which: Union[FormulaId, str], a: int, b: int, c: int) -> int:
    which = FormulaId(which)
    context = f"{which.value}({a},{b},{c})"
    check_needle_hypotheses(a, b, c, context)
    return integer_value(needle_exp(which, a, b, c), context)
