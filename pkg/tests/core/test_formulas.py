import unittest
from fractions import Fraction

from hypothesis import assume, given
from hypothesis import strategies as st

from src.contour import Family, derive_sides, is_valid
from src.counting import WeightPoly, factorize23
from src.errors import HypothesisViolation, NegativeExponent
from src.formulas import (
    FunctionPair,
    RecurrenceId,
    aztec_dragon_count,
    check_recurrence,
    evaluate_formula,
    evaluate_recurrence,
    family_formula,
    flip_identity_one,
    flip_identity_two,
    formula_exponents,
    needle_exp,
    needle_formula,
    phi,
    phi_exp,
    phi_value,
    psi,
    psi_exp,
    recurrence_counterexamples,
    recurrence_pairs,
    weighted_exponents,
    weighted_formula,
)

small = st.integers(-12, 12)
nonneg = st.integers(0, 12)


class TestClosedForms(unittest.TestCase):
    def test_known_values(self):
        self.assertEqual(phi(1, 1, 0), 4)
        self.assertEqual(phi(3, 3, 0), 4096)
        self.assertEqual(phi(3, 2, 0), 16)
        self.assertEqual(psi(2, 3, 1), 16)
        self.assertEqual(family_formula(Family.F2, 2, 3, 1), 16)

    def test_exponents(self):
        self.assertEqual(phi_exp(4, 4, 1), (12, 0))
        self.assertEqual(psi_exp(2, 3, 1), (4, 0))
        self.assertEqual(phi_exp(1, 3, 0), (24, 3))

    def test_aztec_dragon_specialization(self):
        for n in range(1, 6):
            self.assertEqual(phi(n, n, 0), aztec_dragon_count(n))

    def test_rational_value_matches_integer_form(self):
        self.assertEqual(phi_value(3, 3, 0), Fraction(4096))
        self.assertEqual(phi_value(0, 3, 3), Fraction(2**12))

    @given(nonneg, st.integers(1, 12), nonneg)
    def test_valid_regions_have_nonnegative_exponents(self, a, b, c):
        assume(is_valid(derive_sides(Family.F1, a, b, c)))
        e2, e3 = phi_exp(a, b, c)
        self.assertGreaterEqual(e2, 0)
        self.assertGreaterEqual(e3, 0)


class TestFlipIdentities(unittest.TestCase):
    @given(small, small, small)
    def test_flip_one(self, a, b, c):
        assume(2 * b - 2 * a - c + 1 >= 0)
        self.assertTrue(flip_identity_one(a, b, c))

    @given(small, small, small)
    def test_flip_two(self, a, b, c):
        assume(2 * a - 2 * b + c - 1 >= 0)
        self.assertTrue(flip_identity_two(a, b, c))

    def test_off_branch(self):
        with self.assertRaises(HypothesisViolation):
            flip_identity_one(3, 2, 0)
        with self.assertRaises(HypothesisViolation):
            flip_identity_two(0, 2, 0)


class TestRecurrences(unittest.TestCase):
    def test_pairs(self):
        self.assertEqual(recurrence_pairs(RecurrenceId.R3_FIRST), [FunctionPair.MIXED])
        self.assertEqual(recurrence_pairs("R1"), [FunctionPair.PHI, FunctionPair.PSI])
        with self.assertRaises(ValueError):
            evaluate_recurrence(RecurrenceId.R1, FunctionPair.MIXED, 0, 0, 0)

    def test_known_points(self):
        self.assertTrue(check_recurrence("R2", "phi", 4, 4, 1))
        self.assertTrue(check_recurrence("R3first", "mixed", 4, 4, 0))
        for r in ("R1", "R4", "R5"):
            self.assertTrue(check_recurrence(r, "phi", 0, 0, 0))

    def test_grid_has_no_counterexamples(self):
        self.assertEqual(recurrence_counterexamples(2), [])

    @given(small, small, small, st.sampled_from(list(RecurrenceId)))
    def test_recurrences_hold_everywhere(self, a, b, c, recurrence):
        for pair in recurrence_pairs(recurrence):
            check = evaluate_recurrence(recurrence, pair, a, b, c)
            self.assertTrue(check.holds, f"{recurrence.value}/{pair.value} at {(a, b, c)}")


class TestWeighted(unittest.TestCase):
    def test_first_weighted_example(self):
        value = weighted_formula("w1", 1, 1, 0)
        self.assertEqual(value.format(), "x^4 + 2x^2 + 1")
        self.assertEqual(value.evaluate(1), phi(1, 1, 0))

    def test_hypotheses(self):
        with self.assertRaises(HypothesisViolation):
            weighted_formula("w1", 9, 5, 0)
        with self.assertRaises(HypothesisViolation):
            weighted_formula("w2", -1, 3, 0)

    @given(nonneg, st.integers(1, 12), nonneg, st.sampled_from(["w1", "w2"]))
    def test_specializes_to_unweighted_count(self, a, b, c, which):
        family = Family.F1 if which == "w1" else Family.F2
        assume(is_valid(derive_sides(family, a, b, c)))
        try:
            value = weighted_formula(which, a, b, c)
        except NegativeExponent:
            return
        expected = phi(a, b, c) if which == "w1" else psi(a, b, c)
        self.assertEqual(value.evaluate(1), expected)

    def test_exponent_record(self):
        exps = weighted_exponents("w1", 1, 1, 0)
        self.assertEqual((exps.two, exps.a, exps.b, exps.c), (0, 2, 0, 0))
        self.assertEqual(formula_exponents("w1", 1, 1, 0), (0, 2, 0, 0))


class TestNeedle(unittest.TestCase):
    def test_known_values(self):
        self.assertEqual(needle_formula("n1", 2, 2, 0), 144)
        self.assertEqual(needle_formula("n1", 2, 3, 1), 2**6 * 3**4)
        self.assertEqual(needle_exp("n1", 1, 3, 1), (9, 10))
        self.assertEqual(needle_exp("n2", 1, 3, 1), (9, 9))

    def test_hypotheses(self):
        with self.assertRaises(HypothesisViolation):
            needle_formula("n1", 1, 1, 0)
        with self.assertRaises(ValueError):
            needle_exp("phi", 1, 2, 0)

    def test_negative_a_is_outside_domain(self):
        for a, b, c in [(-1, 2, 0), (-2, 3, 0)]:
            with self.assertRaises(HypothesisViolation) as ctx:
                needle_formula("n1", a, b, c)
            self.assertEqual(ctx.exception.inequality, "a >= 0")

    def test_negative_c_is_outside_domain(self):
        for which in ("n1", "n2"):
            with self.assertRaises(HypothesisViolation) as ctx:
                needle_formula(which, 0, 2, -1)
            self.assertEqual(ctx.exception.inequality, "c >= 0")

    @given(nonneg, st.integers(2, 10), nonneg, st.sampled_from(["n1", "n2"]))
    def test_values_are_products_of_two_and_three(self, a, b, c, which):
        assume(2 * b - a - 2 * c >= 0 and 3 * b - 2 * a - 2 * c >= 0)
        try:
            value = needle_formula(which, a, b, c)
        except NegativeExponent:
            return
        self.assertEqual(factorize23(value), needle_exp(which, a, b, c))


class TestDispatch(unittest.TestCase):
    def test_dispatch(self):
        self.assertEqual(evaluate_formula("phi", 3, 3, 0), 4096)
        self.assertEqual(evaluate_formula("psi", 2, 3, 1), 16)
        self.assertIsInstance(evaluate_formula("w2", 2, 3, 1), WeightPoly)
        self.assertEqual(evaluate_formula("n1", 2, 2, 0), 144)
        self.assertEqual(formula_exponents("phi", 3, 3, 0), (12, 0))
