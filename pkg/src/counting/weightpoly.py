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

"""Laurent polynomials in one indeterminate with exact integer coefficients."""

from fractions import Fraction
from typing import Dict, Mapping, Tuple, Union

from sympy import Poly, Symbol, ZZ

X = Symbol("x")

Scalar = Union[int, Fraction]


def _power(k: int) -> Poly:
    return Poly(X**k, X, domain=ZZ)


class WeightPoly:
    """
    x^shift * poly, with poly an integer polynomial whose constant term is
    nonzero (or the zero polynomial with shift 0).
    """

    __slots__ = ("_poly", "_shift")

    def __init__(self, poly: Poly, shift: int = 0):
        self._poly, self._shift = self._normalize(poly, shift)

    @staticmethod
    def _normalize(poly: Poly, shift: int) -> Tuple[Poly, int]:
        if poly.is_zero:
            return Poly(0, X, domain=ZZ), 0
        low = min(monom[0] for monom, _ in poly.terms())
        if low:
            poly = Poly.from_dict({(m[0] - low,): c for m, c in poly.terms()}, X, domain=ZZ)
        return poly, shift + low

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "WeightPoly":
        nonzero = {k: int(c) for k, c in terms.items() if c}
        if not nonzero:
            return cls.zero()
        low = min(nonzero)
        poly = Poly.from_dict({(k - low,): c for k, c in nonzero.items()}, X, domain=ZZ)
        return cls(poly, low)

    @classmethod
    def zero(cls) -> "WeightPoly":
        return cls(Poly(0, X, domain=ZZ))

    @classmethod
    def one(cls) -> "WeightPoly":
        return cls.monomial(0)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "WeightPoly":
        return cls(Poly(coefficient, X, domain=ZZ), exponent)

    @classmethod
    def from_poly(cls, poly: Poly) -> "WeightPoly":
        return cls(Poly(poly.as_expr(), X, domain=ZZ))

    def terms(self) -> Dict[int, int]:
        if self._poly.is_zero:
            return {}
        return {m[0] + self._shift: int(c) for m, c in self._poly.terms()}

    @property
    def is_zero(self) -> bool:
        return self._poly.is_zero

    def __bool__(self) -> bool:
        return not self.is_zero

    def degree(self) -> int:
        return self._shift + self._poly.degree() if not self.is_zero else 0

    def low_degree(self) -> int:
        return self._shift

    def _aligned(self, low: int) -> Poly:
        return self._poly * _power(self._shift - low)

    def _coerce(self, other) -> "WeightPoly":
        if isinstance(other, WeightPoly):
            return other
        if isinstance(other, int):
            return WeightPoly.monomial(0, other)
        return NotImplemented

    def __add__(self, other) -> "WeightPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self._shift, other._shift)
        return WeightPoly(self._aligned(low) + other._aligned(low), low)

    __radd__ = __add__

    def __mul__(self, other) -> "WeightPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return WeightPoly(self._poly * other._poly, self._shift + other._shift)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "WeightPoly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        return WeightPoly(self._poly**n, self._shift * n)

    def evaluate(self, x: Scalar) -> Union[int, Fraction]:
        """Exact value at a rational point."""
        x = Fraction(x)
        total = Fraction(0)
        for k, c in self.terms().items():
            total += c * x**k
        return int(total) if total.denominator == 1 else total

    def format(self) -> str:
        """Descending powers: `x^4 + 2x^2 + 1`."""
        if self.is_zero:
            return "0"
        parts = []
        for k, c in sorted(self.terms().items(), reverse=True):
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def _key(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self.terms().items()))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = WeightPoly.monomial(0, other)
        if not isinstance(other, WeightPoly):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"WeightPoly({self.format()})"

    def __str__(self) -> str:
        return self.format()
