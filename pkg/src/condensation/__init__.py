from .kuo import FourPoint, IdentityReport, enumerate_four_points, kuo_check, validate_four_point
from .lemmas import LemmaId, LemmaOperands, lemma_hypotheses, lemma_identity, lemma_operands, lemma_triples

__all__ = [
    "FourPoint",
    "IdentityReport",
    "LemmaId",
    "LemmaOperands",
    "enumerate_four_points",
    "kuo_check",
    "lemma_hypotheses",
    "lemma_identity",
    "lemma_operands",
    "lemma_triples",
    "validate_four_point",
]
