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

from typing import Tuple

from sympy import multiplicity

from src.errors import ResidualFactor


def factorize23(n: int) -> Tuple[int, int]:
    """Return (alpha, beta) with n = 2**alpha * 3**beta."""
    if n < 1:
        raise ValueError(f"factorize23 needs a positive integer, got {n}")
    alpha = multiplicity(2, n)
    beta = multiplicity(3, n)
    residual = n // (2**alpha * 3**beta)
    if residual != 1:
        raise ResidualFactor(residual)
    return int(alpha), int(beta)
