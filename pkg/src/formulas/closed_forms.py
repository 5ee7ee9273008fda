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
Closed forms for dragon-region counts.

    Phi(a,b,c) = 2^((b-c+1)(2b-a-c) + (a-b)^2) * 3^(n(n-1)/2)
    Psi(a,b,c) = 2^((b-c-1)(2b-a-c) + (a-b)^2) * 3^(n(n+1)/2)

with n = a - b + c. The exponent forms are defined for every integer triple
and are what recurrence and flip checks evaluate, as exact rationals.
"""

from enum import Enum
from fractions import Fraction
from typing import Tuple

from src.contour import Family
from src.errors import HypothesisViolation, NegativeExponent

Exponents = Tuple[int, int]


class FormulaId(str, Enum):
    PHI = "phi"
    PSI = "psi"
    W1 = "w1"
    W2 = "w2"
    N1 = "n1"
    N2 = "n2"


def phi_exp(a: int, b: int, c: int) -> Exponents:
    n = a - b + c
    return (b - c + 1) * (2 * b - a - c) + (a - b) ** 2, n * (n - 1) // 2


def psi_exp(a: int, b: int, c: int) -> Exponents:
    n = a - b + c
    return (b - c - 1) * (2 * b - a - c) + (a - b) ** 2, n * (n + 1) // 2


def rational_value(exponents: Exponents) -> Fraction:
    e2, e3 = exponents
    return Fraction(2) ** e2 * Fraction(3) ** e3


def integer_value(exponents: Exponents, context: str) -> int:
    e2, e3 = exponents
    if e2 < 0 or e3 < 0:
        raise NegativeExponent(f"{context}: exponents (2^{e2}, 3^{e3}) are not both nonnegative")
    return 2**e2 * 3**e3


def phi_value(a: int, b: int, c: int) -> Fraction:
    return rational_value(phi_exp(a, b, c))


def psi_value(a: int, b: int, c: int) -> Fraction:
    return rational_value(psi_exp(a, b, c))


def phi(a: int, b: int, c: int) -> int:
    return integer_value(phi_exp(a, b, c), f"phi({a},{b},{c})")


def psi(a: int, b: int, c: int) -> int:
    return integer_value(psi_exp(a, b, c), f"psi({a},{b},{c})")


def family_formula(family: Family, a: int, b: int, c: int) -> int:
    """Predicted tiling count of the dragon region of the given family."""
    return phi(a, b, c) if Family(family) is Family.F1 else psi(a, b, c)


def family_exponents(family: Family, a: int, b: int, c: int) -> Exponents:
    return phi_exp(a, b, c) if Family(family) is Family.F1 else psi_exp(a, b, c)


def aztec_dragon_count(n: int) -> int:
    return 2 ** (n * (n + 1))


def half_aztec_dragon_count(n: int) -> int:
    """Count for the order n + 1/2 dragon, the second-family region (n+1, n+2, 1)."""
    return 2 ** ((n + 1) ** 2)


def flip_identity_one(a: int, b: int, c: int) -> bool:
    """Phi is invariant under the flip (a,b,c) -> (f, e, d) of the first family."""
    f = 2 * b - 2 * a - c + 1
    if f < 0:
        raise HypothesisViolation("2b-2a-c+1 >= 0", f"flip identity one at ({a},{b},{c})")
    image = (f, 3 * b - 2 * a - 2 * c + 1, 2 * b - a - 2 * c + 1)
    return phi_value(a, b, c) == phi_value(*image)


def flip_identity_two(a: int, b: int, c: int) -> bool:
    """Phi(a,b,c) = Psi(b, a, f) on the branch where the vertical side runs north."""
    f = 2 * a - 2 * b + c - 1
    if f < 0:
        raise HypothesisViolation("2a-2b+c-1 >= 0", f"flip identity two at ({a},{b},{c})")
    return phi_value(a, b, c) == psi_value(b, a, f)
