from .closed_forms import (
    FormulaId,
    aztec_dragon_count,
    family_exponents,
    family_formula,
    flip_identity_one,
    flip_identity_two,
    half_aztec_dragon_count,
    phi,
    phi_exp,
    phi_value,
    psi,
    psi_exp,
    psi_value,
)
from .dispatch import evaluate_formula, formula_exponents
from .needle import needle_exp, needle_formula
from .recurrences import (
    FunctionPair,
    RecurrenceCheck,
    RecurrenceId,
    check_recurrence,
    evaluate_recurrence,
    recurrence_counterexamples,
    recurrence_pairs,
)
from .weighted import WeightedExponents, weighted_exponents, weighted_formula

__all__ = [
    "FormulaId",
    "FunctionPair",
    "RecurrenceCheck",
    "RecurrenceId",
    "WeightedExponents",
    "aztec_dragon_count",
    "check_recurrence",
    "evaluate_formula",
    "evaluate_recurrence",
    "family_exponents",
    "family_formula",
    "flip_identity_one",
    "flip_identity_two",
    "formula_exponents",
    "half_aztec_dragon_count",
    "needle_exp",
    "needle_formula",
    "phi",
    "phi_exp",
    "phi_value",
    "psi",
    "psi_exp",
    "psi_value",
    "recurrence_counterexamples",
    "recurrence_pairs",
    "weighted_exponents",
    "weighted_formula",
]
