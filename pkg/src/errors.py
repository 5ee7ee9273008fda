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

"""Exception hierarchy shared by every dragon-tilings module."""


class DragonError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSpec(DragonError, ValueError):
    """A contour triple is outside the domain an operation accepts."""


class UnbalancedConstruction(DragonError, RuntimeError):
    """A region built from a valid contour has unequal color classes."""

    def __init__(self, black: int, white: int, detail: str = ""):
        self.black = black
        self.white = white
        message = f"unbalanced region: black={black} white={white}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class EmbeddingInvalid(DragonError, RuntimeError):
    """Face traversal of a rotation system did not close up."""


class NonPerfectSquareDeterminant(DragonError, ArithmeticError):
    """The Kasteleyn determinant is not a perfect square."""

    def __init__(self, determinant: int):
        self.determinant = determinant
        super().__init__(f"determinant {determinant} is not a perfect square")


class NonPfaffianOrientation(DragonError, ArithmeticError):
    """A bounded face has an even number of clockwise edges."""

    def __init__(self, face_size: int, clockwise: int):
        self.face_size = face_size
        self.clockwise = clockwise
        super().__init__(f"face of length {face_size} has {clockwise} clockwise edges, need an odd number")


class ResidualFactor(DragonError, ArithmeticError):
    """A count has a prime factor other than 2 and 3."""

    def __init__(self, residual: int):
        self.residual = residual
        super().__init__(f"residual factor {residual} after removing powers of 2 and 3")


class NegativeExponent(DragonError, ValueError):
    """A closed form was evaluated outside its integer-valued domain."""


class HypothesisViolation(DragonError, ValueError):
    """Inputs violate the hypotheses of a formula or lemma."""

    def __init__(self, inequality: str, context: str = ""):
        self.inequality = inequality
        message = f"hypothesis violated: {inequality}"
        if context:
            message = f"{context}: {message}"
        super().__init__(message)


class NonIntegerExponent(DragonError, ValueError):
    """A closed-form exponent evaluated to a non-integer."""


class InvalidFourPoint(DragonError, ValueError):
    """Four vertices do not satisfy the condensation preconditions."""


class MissingRegion(DragonError, RuntimeError):
    """An identity names a region whose contour is not valid."""


class UnknownVertex(DragonError, KeyError):
    """A vertex is not present in the graph."""


class GraphFormatError(DragonError, ValueError):
    """Graph text does not follow the `mg` line format."""


class CounterDisagreement(DragonError, ArithmeticError):
    """Two independent counters returned different values for one graph."""

    def __init__(self, primary: int, oracle: int, detail: str = ""):
        self.primary = primary
        self.oracle = oracle
        message = f"counters disagree: primary={primary} oracle={oracle}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)
