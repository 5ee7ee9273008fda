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
Weighted dragon counts, where every tile not of weight 1 carries weight x.

    W1 = 2^((a-b)(a-b-1)/2) (x^2+1)^A (x^2+2)^B x^C
    W2 = 2^((b-a)(b-a-1)/2) (x^2+1)^A' (x^2+2)^B' x^C'

C and C' may be negative, so values are Laurent polynomials.
"""

from dataclasses import dataclass
from typing import Union

from sympy import Poly, ZZ

from src.contour import Family, derive_sides
from src.counting import WeightPoly
from src.counting.weightpoly import X
from src.errors import HypothesisViolation, NegativeExponent

from .closed_forms import FormulaId


@dataclass(frozen=True)
class WeightedExponents:
    two: int
    a: int
    b: int
    c: int


def weighted_exponents(which: Union[FormulaId, str], a: int, b: int, c: int) -> WeightedExponents:
    which = FormulaId(which)
    n = a - b + c
    if which is FormulaId.W1:
        return WeightedExponents(
            two=(a - b) * (a - b - 1) // 2,
            a=(b - c + 1) * (2 * b - a - c) + (b - a) * (b - a - 1) // 2,
            b=n * (n - 1) // 2,
            c=(a - b - 1) ** 2 + (n - 1) * n - c + min(2 * a - 2 * b + c - 1, 0),
        )
    if which is FormulaId.W2:
        return WeightedExponents(
            two=(b - a) * (b - a - 1) // 2,
            a=(b - c - 1) * (2 * b - a - c) + (a - b) * (a - b - 1) // 2,
            b=n * (n + 1) // 2,
            c=(b - a - 1) ** 2 + (n + 1) * n - max(2 * a - 2 * b + c + 1, 0),
        )
    raise ValueError(f"{which.value} is not a weighted formula")


def check_weighted_hypotheses(which: Union[FormulaId, str], a: int, b: int, c: int) -> None:
    which = FormulaId(which)
    family = Family.F1 if which is FormulaId.W1 else Family.F2
    context = f"{which.value}({a},{b},{c})"
    spec = derive_sides(family, a, b, c)
    if a < 0 or c < 0:
        raise HypothesisViolation("a >= 0 and c >= 0", context)
    # b = 1 still names a valid region and the closed form agrees there
    if b < 1:
        raise HypothesisViolation("b >= 1", context)
    if spec.d < 0:
        raise HypothesisViolation(f"d = {spec.d} >= 0", context)
    if spec.e < 0:
        raise HypothesisViolation(f"e = {spec.e} >= 0", context)


def weighted_formula(which: Union[FormulaId, str], a: int, b: int, c: int) -> WeightPoly:
    check_weighted_hypotheses(which, a, b, c)
    exps = weighted_exponents(which, a, b, c)
    if min(exps.a, exps.b) < 0:
        raise NegativeExponent(f"{FormulaId(which).value}({a},{b},{c}): A={exps.a} B={exps.b}")
    poly = (
        Poly(2**exps.two, X, domain=ZZ)
        * Poly(X**2 + 1, X, domain=ZZ) ** exps.a
        * Poly(X**2 + 2, X, domain=ZZ) ** exps.b
    )
    return WeightPoly(poly, exps.c)
