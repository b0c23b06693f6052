import unittest
from fractions import Fraction
from unittest.mock import patch

from hypothesis import given, settings, strategies as st

from seifert_kappa.seifert_helpers.eta import LensSpaceData
from seifert_kappa.seifert_helpers.kappa import KappaSet, PosetVector
from seifert_kappa.seifert_helpers.obstruct import (
    CATALOG_NAMES,
    EXCLUDED,
    HYPOTHESES_UNMET,
    NOT_EXCLUDED,
    EquivariantManifoldData,
    FixedPointData,
    catalog_entry,
    check_cobordism,
    check_filling,
    cobordism_list,
    cobordism_verdict,
    comparing_identity,
    e8_cancellation,
    e8_expected_data,
    e8_fixed_point_data,
    filling_verdict,
    free_stabilize,
    h_cobordism_check,
    ht_stabilize,
    min_free_stabilizations,
    n_family_data,
    nonextension_verdict,
    sharpness,
    sigma0_via_cosecant,
    sigma_vector,
    verdict_report,
)
from seifert_kappa.seifert_helpers.seifert import SeifertData
from seifert_kappa.seifert_helpers.sums import BRUTE, CosecantSumSpec, cosecant_sum
from seifert_kappa.seifert_helpers.util import (
    FAMILY_MINUS_1,
    MissingCatalogData,
    NoSuchFixedPoint,
    NotCoprime,
    ParityHypothesisViolated,
    SurfacesPresent,
)


def _units(p):
    return st.integers(min_value=1, max_value=p - 1)


class TestFixedPointData(unittest.TestCase):
    def test_equivalences(self):
        d = FixedPointData(5, ((1, 2),))
        self.assertEqual(d, FixedPointData(5, ((2, 1),)))
        self.assertEqual(d, FixedPointData(5, ((-1, -2),)))
        self.assertEqual(d, FixedPointData(5, ((6, 7),)))
        self.assertEqual(d.count(2, 1), 1)

    def test_invalid(self):
        with self.assertRaises(NotCoprime):
            FixedPointData(5, ((5, 1),))
        with self.assertRaises(ValueError):
            FixedPointData(4)

    def test_ht_stabilize(self):
        d = ht_stabilize(FixedPointData(7, ((2, 3),)), (2, 3))
        self.assertEqual(d, FixedPointData(7, ((2, 3), (2, 3), (-2, 3))))
        with self.assertRaises(NoSuchFixedPoint):
            ht_stabilize(FixedPointData(7, ((1, 1),)), (2, 3))
        with self.assertRaises(NoSuchFixedPoint):
            FixedPointData(7).remove(1, 1)


class TestSignatureDefects(unittest.TestCase):
    def test_empty_data(self):
        self.assertEqual(sigma_vector(FixedPointData(5), 10), (Fraction(2),) * 5)

    def test_n_family_at_seven(self):
        expected = 2 * cosecant_sum(CosecantSumSpec(2, 3, 7, -1), BRUTE)
        d = n_family_data(7)
        self.assertEqual(sigma0_via_cosecant(d, 0), expected)
        self.assertEqual(sigma_vector(d, 0)[0], expected)

    def test_n_family_at_five(self):
        self.assertEqual(sigma0_via_cosecant(n_family_data(5), 0), Fraction(-16, 5))

    def test_single_point_both_ways(self):
        d = FixedPointData(3, ((1, 1),))
        self.assertEqual(sigma0_via_cosecant(d, 0), sigma_vector(d, 0)[0])

    def test_surfaces(self):
        d = FixedPointData(5, (), ((1, 2),))
        with self.assertRaises(SurfacesPresent):
            sigma0_via_cosecant(d, 0)
        self.assertEqual(sum(sigma_vector(d, -3)), -3)

    @given(st.sampled_from((3, 5, 7)), st.data())
    @settings(deadline=None, max_examples=20)
    def test_defects_sum_to_signature(self, p, data):
        points = data.draw(st.lists(st.tuples(_units(p), _units(p)), max_size=4))
        surfaces = data.draw(st.lists(st.tuples(_units(p), st.integers(-3, 3)), max_size=2))
        sigma = data.draw(st.integers(-16, 16))
        d = FixedPointData(p, tuple(points), tuple(surfaces))
        S = sigma_vector(d, sigma)
        self.assertEqual(sum(S), sigma)
        if d.pseudofree:
            self.assertEqual(sigma0_via_cosecant(d, sigma), S[0])

    @given(st.sampled_from((5, 7)), st.data())
    @settings(deadline=None, max_examples=15)
    def test_stabilization_invariance(self, p, data):
        a, b = data.draw(_units(p)), data.draw(_units(p))
        d = FixedPointData(p, ((a, b), (1, 1)))
        self.assertEqual(sigma_vector(ht_stabilize(d, (a, b)), 0), sigma_vector(d, 0))
        m = EquivariantManifoldData(0, (2,) * p, d)
        self.assertEqual(free_stabilize(m, 3).b2_plus, m.b2_plus + 3 * p)
        self.assertEqual(free_stabilize(m, 3).fpd, d)


class TestInequalities(unittest.TestCase):
    def test_trivial_data(self):
        m = EquivariantManifoldData(0, (0,) * 5, FixedPointData(5))
        check = check_filling(m, [(0, 0)])
        self.assertEqual(check.verdict, NOT_EXCLUDED)
        self.assertEqual(check.C, 0)
        self.assertEqual(check.sigma0, 0)

    def test_parity(self):
        m = EquivariantManifoldData(0, (0, 1, 0, 0, 0), FixedPointData(5))
        with self.assertRaises(ParityHypothesisViolated):
            check_filling(m, [(0, 0)])
        self.assertEqual(filling_verdict(m, [(0, 0)]), HYPOTHESES_UNMET)

    def test_single_failure_excludes(self):
        m = EquivariantManifoldData(0, (0,) * 5, FixedPointData(5))
        check = check_filling(m, [(0, 0), (-1, 1)])
        self.assertEqual(check.verdict, EXCLUDED)
        self.assertEqual([row[1] for row in check.rows], [True, False])

    def test_cobordism_needs_fixed_points(self):
        m = EquivariantManifoldData(0, (0,) * 5, FixedPointData(5))
        with self.assertRaises(NoSuchFixedPoint):
            check_cobordism(m, [(0, 0)], [(0, 0)], True)

    def test_b2_plus_vector(self):
        with self.assertRaises(ValueError):
            EquivariantManifoldData(0, (0, 0), FixedPointData(5))
        m = EquivariantManifoldData(0, (1, 0, 0), FixedPointData(3))
        self.assertTrue(m.homologically_trivial)


class TestVerdicts(unittest.TestCase):
    def test_sharpness(self):
        for name in CATALOG_NAMES:
            if "#" in name:
                continue
            self.assertTrue(sharpness(catalog_entry(name, 2))[0], name)
        self.assertEqual(sharpness(catalog_entry("N"))[1], 1)
        self.assertEqual(sharpness(catalog_entry("M(2,3,7)"))[1], 2)

    def test_catalog(self):
        self.assertEqual(catalog_entry("N", 5).boundary, SeifertData((2, 3, 59)))
        with self.assertRaises(MissingCatalogData):
            catalog_entry("K3")

    def test_nonextension(self):
        self.assertEqual(nonextension_verdict(catalog_entry("N", 1), 7), EXCLUDED)
        self.assertEqual(nonextension_verdict(catalog_entry("N", 1), 5), NOT_EXCLUDED)
        self.assertEqual(nonextension_verdict(catalog_entry("N", 2), 5), EXCLUDED)
        self.assertEqual(nonextension_verdict(catalog_entry("M(2,3,11)"), 5), NOT_EXCLUDED)
        self.assertEqual(nonextension_verdict(catalog_entry("M(2,3,11)"), 7), EXCLUDED)
        for p in (3, 5, 7, 11):
            self.assertEqual(nonextension_verdict(catalog_entry("P", 2), p), EXCLUDED)
            self.assertEqual(nonextension_verdict(catalog_entry("M(2,3,7)"), p), EXCLUDED)

    def test_nonextension_needs_equal_gradings(self):
        reps = (PosetVector((2, 0, 0, 0, 0, 0, 0)), PosetVector((0, 0, 0, 3, 0, 0, 0)))
        mixed = KappaSet(1, FAMILY_MINUS_1, 1, 7, reps, tuple(v.project() for v in reps))
        with patch("seifert_kappa.seifert_helpers.obstruct.kappa_set", return_value=mixed):
            self.assertEqual(nonextension_verdict(catalog_entry("N", 1), 7), NOT_EXCLUDED)

    def test_report(self):
        report = verdict_report("N", 3, 7)
        self.assertEqual(report["verdict"], EXCLUDED)
        self.assertEqual(report["max_certified_free_stabilizations"], 4)
        self.assertNotIn("max_certified_free_stabilizations", verdict_report("N", 1, 3))

    def test_stabilization_bounds(self):
        self.assertEqual(min_free_stabilizations("N", 3, 7)[0], 4)
        self.assertEqual(min_free_stabilizations("P", 1, 5)[0], 0)
        for n in (1, 2, 3, 4):
            certified, raw = min_free_stabilizations("P", n, 7)
            self.assertEqual(certified % 2, 0)
            self.assertLess(certified, raw)
        with self.assertRaises(ValueError):
            min_free_stabilizations("N", 1, 3)
        with self.assertRaises(ValueError):
            min_free_stabilizations("Q", 1, 5)

    def test_cobordisms(self):
        for p in (3, 5, 7, 11, 13):
            for m0, m1 in cobordism_list(p):
                result = cobordism_verdict(m0, m1, p)
                self.assertTrue(result["sharp"], (m0, m1, p))
                self.assertEqual(result["verdict"], EXCLUDED, (m0, m1, p))
        self.assertNotIn((5, 11), cobordism_list(5))
        self.assertEqual(cobordism_verdict(5, 11, 5)["verdict"], NOT_EXCLUDED)


class TestConstructions(unittest.TestCase):
    def test_h_cobordism(self):
        self.assertTrue(h_cobordism_check(SeifertData((2, 3, 59)), 5,
                                          LensSpaceData(5, -2, 3))["h_cobordant"])
        self.assertTrue(h_cobordism_check(SeifertData((2, 3, 43)), 7,
                                          LensSpaceData(7, 2, 3))["h_cobordant"])
        report = h_cobordism_check(SeifertData((2, 3, 59)), 5, LensSpaceData(5, 1, 1))
        self.assertFalse(report["product"])
        self.assertFalse(report["h_cobordant"])
        with self.assertRaises(NotCoprime):
            h_cobordism_check(SeifertData((2, 3, 5)), 5, LensSpaceData(5, 1, 1))

    def test_e8_lists(self):
        for p in (5, 7, 11, 13, 17, 19):
            pairs, remaining = e8_cancellation(p)
            self.assertEqual(len(pairs), 7)
            self.assertEqual(len(remaining), 10)
            self.assertEqual(e8_fixed_point_data(p), e8_expected_data(p), p)
        expected = FixedPointData(11, ((1, 1), (1, 2), (-1, 2), (-2, 3), (-2, 3), (2, 3),
                                       (-3, 4), (-4, 5), (-5, 6), (-6, 7), (-7, 8), (-8, 9)))
        self.assertEqual(e8_fixed_point_data(11), expected)

    def test_comparing(self):
        for n in (1, 2):
            lhs, rhs, offset = comparing_identity("N", n, 5)
            self.assertEqual(lhs, Fraction(-2, 5))
            self.assertEqual(offset, 0)
            self.assertEqual(comparing_identity("P", n, 5)[2], 4)
            self.assertEqual(comparing_identity("P", n, 7)[2], 0)
        self.assertEqual(comparing_identity("P", 1, 13)[2], 2)
        with self.assertRaises(ValueError):
            comparing_identity("Q", 1, 5)
