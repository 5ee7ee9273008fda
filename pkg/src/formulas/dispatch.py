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

from typing import Tuple, Union

from src.counting import WeightPoly

from .closed_forms import FormulaId, phi, phi_exp, psi, psi_exp
from .needle import needle_exp, needle_formula
from .weighted import check_weighted_hypotheses, weighted_exponents, weighted_formula


def evaluate_formula(which: Union[FormulaId, str], a: int, b: int, c: int) -> Union[int, WeightPoly]:
    which = FormulaId(which)
    if which is FormulaId.PHI:
        return phi(a, b, c)
    if which is FormulaId.PSI:
        return psi(a, b, c)
    if which in (FormulaId.W1, FormulaId.W2):
        return weighted_formula(which, a, b, c)
    return needle_formula(which, a, b, c)


def formula_exponents(which: Union[FormulaId, str], a: int, b: int, c: int) -> Tuple[int, ...]:
    """(2-exp, 3-exp) for integer formulas; (2-exp, A, B, C) for weighted ones."""
    which = FormulaId(which)
    if which is FormulaId.PHI:
        return phi_exp(a, b, c)
    if which is FormulaId.PSI:
        return psi_exp(a, b, c)
    if which in (FormulaId.W1, FormulaId.W2):
        check_weighted_hypotheses(which, a, b, c)
        exps = weighted_exponents(which, a, b, c)
        return exps.two, exps.a, exps.b, exps.c
    return needle_exp(which, a, b, c)
