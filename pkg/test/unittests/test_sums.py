import unittest
from fractions import Fraction
from math import gcd

from hypothesis import assume, given, settings, strategies as st

from seifert_kappa.seifert_helpers.exact import cot_value, csc2_value
from seifert_kappa.seifert_helpers.sums import (
    BRUTE,
    COSECANT_TABLES,
    RECIPROCITY,
    CosecantSumSpec,
    DedekindDieterSpec,
    DedekindRademacherSpec,
    DedekindSpec,
    cosecant_closed_form,
    cosecant_sum,
    cosecant_two_term,
    dedekind_dieter,
    dedekind_rademacher,
    dedekind_sum,
    evaluate,
    p_family_sigma0_closed_form,
    rademacher_brute,
    rademacher_sum,
    tabulated_residues,
    vanishes_by_symmetry,
)
from seifert_kappa.seifert_helpers.util import (
    NotCoprime,
    ParityObstruction,
    ReciprocityHypothesisViolated,
)

PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class TestDedekindSums(unittest.TestCase):
    def test_known_values(self):
        self.assertEqual(dedekind_sum(1, 2), 0)
        self.assertEqual(dedekind_sum(2, 3), Fraction(-1, 18))
        self.assertEqual(dedekind_sum(1, 5), Fraction(1, 5))
        self.assertEqual(dedekind_sum(2, 5), 0)

    def test_closed_form_at_five(self):
        # s(10p - 1, 12p - 1) = (-4p^2 - 1)/(24p - 2)
        self.assertEqual(dedekind_sum(49, 59), Fraction(-101, 118))
        self.assertEqual(dedekind_sum(49, 59, BRUTE), Fraction(-101, 118))

    def test_errors(self):
        with self.assertRaises(NotCoprime):
            dedekind_sum(2, 4)
        with self.assertRaises(ValueError):
            dedekind_sum(1, 0)
        with self.assertRaises(ValueError):
            dedekind_sum(1, 3, "fast")

    @given(st.integers(min_value=2, max_value=200), st.integers(min_value=1, max_value=400))
    @settings(deadline=None, max_examples=60)
    def test_brute_matches_reciprocity(self, a, b):
        assume(gcd(a, b) == 1)
        self.assertEqual(dedekind_sum(b, a, BRUTE), dedekind_sum(b, a, RECIPROCITY))

    @given(st.integers(min_value=1, max_value=500), st.integers(min_value=1, max_value=500))
    @settings(deadline=None)
    def test_reciprocity_law(self, a, b):
        assume(gcd(a, b) == 1)
        expected = Fraction(-1, 4) + (Fraction(a, b) + Fraction(b, a) + Fraction(1, a * b)) / 12
        self.assertEqual(dedekind_sum(b, a) + dedekind_sum(a, b), expected)


class TestRademacherSums(unittest.TestCase):
    def test_known_values(self):
        p = 7
        self.assertEqual(rademacher_sum(p, 2, Fraction(3, 4), Fraction(-1, 2)), 0)
        self.assertEqual(rademacher_sum(2 * p, 3, Fraction(1, 3), Fraction(-1, 2)),
                         Fraction(-1, 18))

    def test_correction_term_shape(self):
        p = 17
        args = (10 * p * p - p, 12 * p - 1, Fraction(24 * p - 3, 24 * p - 2), Fraction(-1, 2))
        self.assertEqual(rademacher_sum(*args), rademacher_brute(*args))

    def test_integer_shifts_reduce_to_dedekind(self):
        self.assertEqual(rademacher_sum(5, 12, 0, 0), dedekind_sum(5, 12))

    def test_hypotheses(self):
        with self.assertRaises(ReciprocityHypothesisViolated):
            dedekind_rademacher(DedekindRademacherSpec(2, 3, Fraction(1), Fraction(2)))
        with self.assertRaises(ReciprocityHypothesisViolated):
            dedekind_rademacher(DedekindRademacherSpec(2, 3, Fraction(1, 7), Fraction(0)))
        with self.assertRaises(ReciprocityHypothesisViolated):
            dedekind_rademacher(DedekindRademacherSpec(2, 4, Fraction(1, 4), Fraction(0)))

    @given(st.integers(min_value=2, max_value=60), st.integers(min_value=1, max_value=120),
           st.integers(min_value=1, max_value=59), st.integers(min_value=-3, max_value=3))
    @settings(deadline=None, max_examples=60)
    def test_brute_matches_reciprocity(self, a, b, j, m):
        assume(gcd(a, b) == 1 and j % a)
        spec = DedekindRademacherSpec(b, a, Fraction(j, a), Fraction(m))
        self.assertEqual(dedekind_rademacher(spec, BRUTE), dedekind_rademacher(spec))

    @given(st.integers(min_value=1, max_value=40), st.integers(min_value=1, max_value=80),
           st.fractions(max_denominator=12), st.fractions(max_denominator=12))
    @settings(deadline=None, max_examples=60)
    def test_unrestricted_shifts(self, a, b, x, y):
        assume(gcd(a, b) == 1)
        self.assertEqual(rademacher_sum(b, a, x, y), rademacher_brute(b, a, x, y))


class TestDieterSums(unittest.TestCase):
    def test_vanishing_value(self):
        spec = DedekindDieterSpec(1, 2, Fraction(1, 5), Fraction(2, 5))
        self.assertEqual(dedekind_dieter(spec, BRUTE), 0)
        self.assertEqual(dedekind_dieter(spec), 0)

    def test_reciprocity_expression(self):
        spec = DedekindDieterSpec(2, 3, Fraction(2, 5), Fraction(3, 5))
        c = cot_value
        expected = (c(Fraction(1, 5)) * c(Fraction(2, 5)) - c(Fraction(2, 5)) * c(Fraction(3, 5))
                    - csc2_value(Fraction(1, 5)) / 3)
        self.assertEqual(dedekind_dieter(spec), expected)
        self.assertEqual(dedekind_dieter(spec, BRUTE), expected)

    def test_shape_required(self):
        with self.assertRaises(ReciprocityHypothesisViolated):
            dedekind_dieter(DedekindDieterSpec(2, 3, Fraction(1, 5), Fraction(3, 5)))

    @given(st.integers(min_value=2, max_value=9), st.integers(min_value=1, max_value=8),
           st.integers(min_value=2, max_value=7), st.integers(min_value=1, max_value=6))
    @settings(deadline=None, max_examples=30)
    def test_brute_matches_reciprocity(self, a, b, r, q):
        assume(b < a and gcd(a, b) == 1 and gcd(a, r) == 1 and gcd(q, r) == 1 and q < r)
        t = Fraction(q, r)
        spec = DedekindDieterSpec(b, a, b * t, a * t)
        self.assertEqual(dedekind_dieter(spec, BRUTE), dedekind_dieter(spec))


class TestCosecantSums(unittest.TestCase):
    def test_known_values(self):
        self.assertEqual(cosecant_sum(CosecantSumSpec(1, 1, 2, -1)), Fraction(-1, 2))
        self.assertEqual(cosecant_sum(CosecantSumSpec(1, 1, 4, -1), BRUTE), Fraction(-3, 4))
        self.assertEqual(cosecant_sum(CosecantSumSpec(2, 3, 5, -1)), Fraction(-8, 5))
        self.assertEqual(cosecant_sum(CosecantSumSpec(2, 3, 5, -1), BRUTE), Fraction(-8, 5))
        self.assertEqual(cosecant_sum(CosecantSumSpec(1, 2, 3, -1), BRUTE), Fraction(-8, 9))

    def test_errors(self):
        with self.assertRaises(NotCoprime):
            cosecant_sum(CosecantSumSpec(5, 1, 5, -1))
        with self.assertRaises(ValueError):
            cosecant_sum(CosecantSumSpec(1, 1, 5, 2))

    @given(st.sampled_from(PRIMES[:10]), st.integers(min_value=1, max_value=28))
    @settings(deadline=None, max_examples=40)
    def test_q1_brute_matches_reciprocity(self, p, q):
        assume(q < p and (q - p) % 2)
        spec = CosecantSumSpec(q, 1, p, -1)
        self.assertEqual(cosecant_sum(spec, BRUTE), cosecant_sum(spec, RECIPROCITY))

    @given(st.sampled_from(PRIMES[1:8]), st.integers(min_value=-12, max_value=12),
           st.integers(min_value=1, max_value=12), st.sampled_from((1, -1)))
    @settings(deadline=None, max_examples=40)
    def test_general_brute_matches_reciprocity(self, p, q, r, eps):
        assume(q % p and r % p)
        spec = CosecantSumSpec(q, r, p, eps)
        try:
            fast = cosecant_sum(spec, RECIPROCITY)
        except ParityObstruction:
            assume(False)
        self.assertEqual(cosecant_sum(spec, BRUTE), fast)

    def test_vanishing_sums(self):
        for q, r, p in ((2, 2, 5), (-8, -8, 9), (-2, -2, 3), (1, 2, 7)):
            spec = CosecantSumSpec(q, r, p, -1)
            self.assertTrue(vanishes_by_symmetry(q, r, p, -1), spec)
            self.assertEqual(cosecant_sum(spec), 0, spec)
            self.assertEqual(cosecant_sum(spec, BRUTE), 0, spec)
        self.assertFalse(vanishes_by_symmetry(2, 3, 5, -1))
        self.assertFalse(vanishes_by_symmetry(1, 1, 4, -1))

    def test_small_moduli_match_brute(self):
        for p in (3, 5, 7):
            for q in range(1 - p, p):
                for r in range(1 - p, p):
                    if gcd(q, p) != 1 or gcd(r, p) != 1:
                        continue
                    for eps in (1, -1):
                        spec = CosecantSumSpec(q, r, p, eps)
                        self.assertEqual(cosecant_sum(spec), cosecant_sum(spec, BRUTE), spec)

    def test_two_term_reciprocity(self):
        for p, q in ((7, 4), (9, 2), (11, 6), (13, 8)):
            total = cosecant_sum(CosecantSumSpec(q, 1, p, -1), BRUTE) + \
                cosecant_sum(CosecantSumSpec(p, 1, q, -1), BRUTE)
            self.assertEqual(total, cosecant_two_term(p, q))

    def test_closed_forms(self):
        for (q, r) in COSECANT_TABLES:
            modulus, residues = tabulated_residues(q, r)
            for p in PRIMES:
                if p <= 2 * max(abs(q), r) or p % modulus not in residues:
                    continue
                self.assertEqual(cosecant_sum(CosecantSumSpec(q, r, p, -1), BRUTE),
                                 cosecant_closed_form(q, r, p), f"S({q},{r},{p};-1)")

    def test_closed_form_lookup(self):
        self.assertEqual(cosecant_closed_form(2, 3, 5), Fraction(-8, 5))
        self.assertEqual(cosecant_closed_form(1, 2, 3), Fraction(-8, 9))
        with self.assertRaises(KeyError):
            cosecant_closed_form(2, 5, 7)
        with self.assertRaises(KeyError):
            p_family_sigma0_closed_form(11)

    def test_dispatch(self):
        self.assertEqual(evaluate(DedekindSpec(2, 3)), Fraction(-1, 18))
        self.assertEqual(evaluate(CosecantSumSpec(2, 3, 5, -1), BRUTE), Fraction(-8, 5))
        with self.assertRaises(ValueError):
            evaluate((2, 3))
