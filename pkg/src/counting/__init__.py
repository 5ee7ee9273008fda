from .brute import MatchingCounter, count_brute, count_weighted
from .engine import CounterKind, CountResult, count, count_with
from .factor import factorize23
from .kasteleyn import (
    MatrixForm,
    abs_pfaffian,
    check_pfaffian_orientation,
    count_kasteleyn,
    exact_determinant,
    pfaffian_orientation,
    skew_matrix,
)
from .weightpoly import WeightPoly

__all__ = [
    "CountResult",
    "CounterKind",
    "MatchingCounter",
    "MatrixForm",
    "WeightPoly",
    "abs_pfaffian",
    "check_pfaffian_orientation",
    "count",
    "count_brute",
    "count_kasteleyn",
    "count_weighted",
    "count_with",
    "exact_determinant",
    "factorize23",
    "pfaffian_orientation",
    "skew_matrix",
]
