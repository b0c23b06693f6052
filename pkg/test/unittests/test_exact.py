import unittest
from fractions import Fraction

import mpmath
from hypothesis import given, settings, strategies as st

from seifert_kappa.seifert_helpers.exact import (
    COS,
    COT,
    CSC,
    CSC2,
    EXP_I_PI,
    SIN,
    SPARSE_MODULUS,
    CyclotomicValue,
    cot_value,
    csc2_value,
    delta,
    frac,
    numerically_equal,
    sawtooth,
    trig_value,
    value_from_json,
    value_to_json,
)
from seifert_kappa.seifert_helpers.util import NotRational, PoleError


class TestScalars(unittest.TestCase):
    def test_frac(self):
        self.assertEqual(frac(Fraction(7, 3)), Fraction(1, 3))
        self.assertEqual(frac(Fraction(-1, 3)), Fraction(2, 3))
        self.assertEqual(frac(4), 0)

    def test_sawtooth(self):
        self.assertEqual(sawtooth(Fraction(3, 4)), Fraction(1, 4))
        self.assertEqual(sawtooth(Fraction(1, 4)), Fraction(-1, 4))
        self.assertEqual(sawtooth(2), 0)

    @given(st.fractions())
    def test_sawtooth_is_odd(self, x):
        self.assertEqual(sawtooth(-x), -sawtooth(x))

    def test_delta(self):
        self.assertEqual(delta(1 - 7, 2), 2)
        self.assertEqual(delta(Fraction(1, 2), 2), 0)
        self.assertEqual(delta(5, 3), 0)


class TestTrigValues(unittest.TestCase):
    def test_rational_values(self):
        self.assertEqual(trig_value(COS, 1, 2), 0)
        self.assertEqual(trig_value(COT, 1, 4), 1)
        self.assertEqual(trig_value(CSC2, 1, 6), 4)
        self.assertEqual(trig_value(COS, 1, 3), Fraction(1, 2))
        self.assertEqual(trig_value(SIN, 1, 2), 1)
        self.assertEqual(trig_value(EXP_I_PI, 1, 1), -1)

    def test_irrational_values(self):
        cot6 = trig_value(COT, 1, 6)
        self.assertFalse(cot6.is_rational)
        self.assertEqual(cot6 * cot6, 3)
        csc4 = trig_value(CSC, 1, 4)
        self.assertEqual(csc4 * csc4, 2)
        with self.assertRaises(NotRational):
            csc4.as_rational()

    def test_cot_product_identity(self):
        c1, c2 = trig_value(COT, 1, 5), trig_value(COT, 2, 5)
        self.assertEqual(c1 * c2 * c1 * c2, Fraction(1, 5))

    def test_poles(self):
        with self.assertRaises(PoleError):
            trig_value(COT, 5, 5)
        with self.assertRaises(PoleError):
            trig_value(CSC2, 0, 3)
        with self.assertRaises(ValueError):
            trig_value("tan", 1, 3)

    def test_integer_conventions(self):
        self.assertEqual(cot_value(3), 0)
        self.assertEqual(csc2_value(2), Fraction(1, 3))

    @given(st.integers(min_value=1, max_value=40), st.integers(min_value=2, max_value=40))
    @settings(deadline=None, max_examples=40)
    def test_csc2_is_one_plus_cot2(self, a, b):
        if (a % b) == 0:
            return
        c = trig_value(COT, a, b)
        self.assertEqual(trig_value(CSC2, a, b), 1 + c * c)


class TestCyclotomicValue(unittest.TestCase):
    def test_constant(self):
        self.assertEqual(CyclotomicValue.rational(Fraction(3, 7), 10).as_rational(),
                         Fraction(3, 7))

    def test_cancellation(self):
        i = CyclotomicValue.root_of_unity(1, 4)
        self.assertEqual(i + CyclotomicValue.root_of_unity(3, 4), 0)
        self.assertEqual(i.conjugate(), -i)
        w = CyclotomicValue.root_of_unity(1, 3)
        self.assertEqual(w + w * w, -1)

    def test_embed(self):
        w = CyclotomicValue.root_of_unity(1, 3)
        self.assertEqual(w.embed(6), CyclotomicValue.root_of_unity(2, 6))
        with self.assertRaises(ValueError):
            w.embed(4)

    def test_mixed_moduli(self):
        # sqrt(3) = cot(pi/6) against 2 sin(pi/3)
        self.assertEqual(trig_value(COT, 1, 6), 2 * trig_value(SIN, 1, 3))

    def test_numeric_check(self):
        self.assertTrue(numerically_equal(trig_value(COT, 1, 6), 2 * trig_value(SIN, 1, 3)))
        self.assertTrue(numerically_equal(trig_value(CSC2, 1, 4), 2))
        self.assertFalse(numerically_equal(trig_value(COT, 1, 5), trig_value(COT, 2, 5)))

    def test_json(self):
        value = trig_value(CSC, 2, 7) * trig_value(COT, 1, 7)
        self.assertEqual(value_from_json(value_to_json(value)), value)
        self.assertEqual(value_from_json(value_to_json(Fraction(-5, 396))), Fraction(-5, 396))

    def test_sparse_storage(self):
        m = 2 * SPARSE_MODULUS
        z = CyclotomicValue.root_of_unity(1, m)
        self.assertTrue(z.is_sparse)
        self.assertFalse(CyclotomicValue.root_of_unity(1, SPARSE_MODULUS).is_sparse)
        self.assertEqual(z.coefficients, {1: 1})
        self.assertEqual(z.conjugate().coefficients, {m // 2 - 1: -1})
        self.assertEqual(z * z.conjugate(), 1)
        self.assertEqual(z ** (m // 2), -1)
        i = CyclotomicValue.root_of_unity(1, 4)
        self.assertEqual(z ** (m // 4), i)
        self.assertIn(z ** (m // 4), {i})
        self.assertEqual((z + 1 - z).as_rational(), 1)

    def test_sparse_trig_value(self):
        c = trig_value(COS, 1, SPARSE_MODULUS)
        self.assertTrue(c.is_sparse)
        self.assertEqual(len(c.coefficients), 2)
        with mpmath.workdps(60):
            self.assertLess(abs(c.to_mpc(50) - mpmath.cos(mpmath.pi / SPARSE_MODULUS)),
                            mpmath.mpf(10) ** -45)
        self.assertEqual(value_from_json(value_to_json(c)), c)
