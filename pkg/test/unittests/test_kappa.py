import unittest
from fractions import Fraction

from seifert_kappa.seifert_helpers.kappa import (
    EVEN,
    MANOLESCU_KAPPA,
    ODD,
    KappaSet,
    PosetVector,
    count_A,
    count_B,
    doubling_map,
    graded_kappa,
    gradings_match,
    has_multiple_elements,
    kappa_multiplicity,
    kappa_set,
    lower_bounds,
    n_vector,
)
from seifert_kappa.seifert_helpers.seifert import SeifertData
from seifert_kappa.seifert_helpers.util import (
    FAMILY_MINUS_1,
    FAMILY_MINUS_5,
    FAMILY_PLUS_1,
    FAMILY_PLUS_5,
    IndexOutOfRange,
    OutsideClassifiedRange,
    UnsupportedFamily,
    family_member,
)


class TestPosetVector(unittest.TestCase):
    def test_arithmetic(self):
        v = PosetVector((1, Fraction(1, 2), -2))
        w = PosetVector.basis(1, 3, 2)
        self.assertEqual((v + w).entries, (1, Fraction(5, 2), -2))
        self.assertEqual((v - v), PosetVector.zero(3))
        self.assertEqual((2 * v).entries, (2, 1, -4))
        self.assertEqual(v.grading, Fraction(-1, 2))
        self.assertEqual(v.project(), PosetVector((1, Fraction(-3, 2))))
        self.assertEqual(str(PosetVector((1, -2))), "(1,-2)")

    def test_order(self):
        v = PosetVector((1, 0, 0))
        self.assertTrue(v.dominates(PosetVector.zero(3)))
        self.assertFalse(PosetVector.zero(3).dominates(v))
        with self.assertRaises(IndexOutOfRange):
            v.dominates(PosetVector.zero(2))
        with self.assertRaises(IndexOutOfRange):
            PosetVector.basis(3, 3)

    def test_doubling(self):
        v = PosetVector((1, 2, 3))
        self.assertEqual(doubling_map(EVEN, v, 3), PosetVector((1, 3, 2)))
        self.assertEqual(doubling_map(ODD, v, 3), PosetVector((2, 1, 3)))
        with self.assertRaises(IndexOutOfRange):
            doubling_map(EVEN, v, 5)
        with self.assertRaises(ValueError):
            doubling_map("triple", v, 3)


class TestCounting(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(count_B(21, 7, 0), 3)
        self.assertEqual(count_B(1, 5, 0), 1)
        self.assertEqual(count_A(1, 5, 0), 0)

    def test_counts_partition(self):
        for p in (5, 7, 11):
            for n in range(1, 8):
                self.assertEqual(sum(lower_bounds(FAMILY_MINUS_1, n, p)), n)
                self.assertEqual(sum(lower_bounds(FAMILY_MINUS_5, n, p)), n)


class TestKappaSets(unittest.TestCase):
    def test_sigma_2_3_7(self):
        Y = SeifertData((2, 3, 7))
        _, n_pi = n_vector(Y, 5)
        K = kappa_set(1, FAMILY_MINUS_5, 1, 5)
        self.assertEqual(set(K.projected),
                         {PosetVector((2, 0)) - n_pi, PosetVector((0, 2)) - n_pi})

    def test_split_family(self):
        Y = SeifertData((2, 3, 17))
        n_full, _ = n_vector(Y, 5)
        self.assertEqual(kappa_set(1, FAMILY_PLUS_5, 1, 5).representatives, (-n_full,))
        self.assertEqual(kappa_set(-1, FAMILY_PLUS_5, 1, 5).representatives, (n_full,))

    def test_reversed_orientation(self):
        n, p = 2, 7
        _, n_pi = n_vector(SeifertData(family_member(FAMILY_MINUS_1, n)), p)
        K = kappa_set(-1, FAMILY_MINUS_1, n, p)
        expected = {PosetVector((2 * k, -2 * k)) + n_pi for k in range(n + 1)}
        self.assertEqual(set(K.projected), expected)

    def test_multiplicity_cases(self):
        self.assertFalse(has_multiple_elements(-1, FAMILY_MINUS_1, 1, 5))
        for n in (1, 2, 3):
            self.assertTrue(has_multiple_elements(-1, FAMILY_MINUS_5, n, 3))
        self.assertTrue(has_multiple_elements(1, FAMILY_MINUS_1, 2, 11))
        self.assertFalse(has_multiple_elements(1, FAMILY_PLUS_1, 1, 7))

    def test_multiplicity_matches_sets(self):
        for sign in (1, -1):
            for family in (FAMILY_MINUS_1, FAMILY_MINUS_5, FAMILY_PLUS_5, FAMILY_PLUS_1):
                for p in (5, 7, 11, 13):
                    for n in range(1, 4):
                        if family_member(family, n)[2] % p == 0:
                            continue
                        K = kappa_set(sign, family, n, p)
                        case = (sign, family, n, p)
                        self.assertEqual(len(K), kappa_multiplicity(sign, family, n, p), case)
                        self.assertEqual(len(K) > 1, has_multiple_elements(sign, family, n, p),
                                         case)
                        self.assertEqual(len(K.gradings), 1, case)
                        if (sign, family) in MANOLESCU_KAPPA:
                            self.assertTrue(gradings_match(K), case)

    def test_gradings_match(self):
        reps = (PosetVector((2, 0, 0)), PosetVector((0, 1, 0)))
        K = KappaSet(1, FAMILY_MINUS_1, 1, 3, reps, tuple(v.project() for v in reps))
        self.assertEqual(K.gradings, (1, 2))
        self.assertFalse(gradings_match(K))
        reps = (PosetVector((2, 0, 0)), PosetVector((0, 1, 1)))
        K = KappaSet(1, FAMILY_MINUS_1, 1, 3, reps, tuple(v.project() for v in reps))
        self.assertTrue(gradings_match(K))
        with self.assertRaises(OutsideClassifiedRange):
            gradings_match(KappaSet(-1, FAMILY_PLUS_1, 1, 3, reps, reps))

    def test_domain(self):
        self.assertEqual(graded_kappa(1, FAMILY_MINUS_1), 2)
        self.assertEqual(graded_kappa(-1, FAMILY_MINUS_5), 1)
        with self.assertRaises(OutsideClassifiedRange):
            graded_kappa(-1, FAMILY_PLUS_5)
        with self.assertRaises(OutsideClassifiedRange):
            kappa_multiplicity(1, FAMILY_MINUS_1, 1, 4)
        with self.assertRaises(OutsideClassifiedRange):
            kappa_multiplicity(1, FAMILY_MINUS_1, 0, 5)
        with self.assertRaises(UnsupportedFamily):
            kappa_multiplicity(1, "12n+3", 1, 5)
