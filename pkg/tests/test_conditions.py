"""
Pruebas Unitarias para el Verificador de Condiciones
"""

import unittest
import sys
import os
import math

import numpy as np

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from conditions import (
    ConditionChecker,
    ConditionError,
    SumPolicy,
    TripleGrid,
    check_cartesian_submaximality,
    check_lsc_numeric,
    check_separate_submaximality,
    check_submaximal_1d,
    iter_cartesian_violations,
)
from reports import Verdict, exceeds
from supremand import GridSupremand, catalog, compose, hull, load_local_supremand, load_supremand

POSITIVE_GRID = tuple(k * math.pi / 8 for k in range(1, 17))


class TestTripleGrid(unittest.TestCase):
    """Pruebas para TripleGrid"""

    def test_valid(self):
        grid = TripleGrid((1, 2, 3))
        self.assertEqual(grid.points, (1.0, 2.0, 3.0))
        self.assertEqual(grid.sum_policy, SumPolicy.SKIP_UNDEFINED)

    def test_invalid(self):
        with self.assertRaises(ConditionError):
            TripleGrid((1.0, 0.0))
        with self.assertRaises(ConditionError):
            TripleGrid((1.0, 1.0))


class TestCartesianSubmaximality(unittest.TestCase):
    """Pruebas para check_cartesian_submaximality"""

    def setUp(self):
        self.checker = ConditionChecker()

    def test_default_tolerances(self):
        grid = GridSupremand((1.0,), np.zeros((1, 1)))
        self.assertEqual(self.checker.default_tol(grid), 0.0)
        self.assertEqual(self.checker.default_tol(catalog("sin-ratio-sum")), 1e-12)

    def test_sin_ratio_sum_fails(self):
        report = check_cartesian_submaximality(catalog("sin-ratio-sum"),
                                               TripleGrid((math.pi / 2, math.pi)))
        self.assertEqual(report.verdict, Verdict.FAIL)
        self.assertEqual(report.witness.arguments, (math.pi / 2,) * 3)
        self.assertAlmostEqual(report.witness.lhs, 2 / (3 * math.pi), delta=1e-12)
        self.assertAlmostEqual(report.witness.rhs, 0.0, delta=1e-12)
        self.assertEqual(report.tuples_checked, 8)
        self.assertEqual(report.tuples_skipped, 0)

    def test_witness_satisfies_gap(self):
        report = check_cartesian_submaximality(catalog("sin-ratio-sum"), TripleGrid(POSITIVE_GRID))
        self.assertFalse(report.passed)
        self.assertTrue(exceeds(report.witness.lhs, report.witness.rhs, report.tolerance))

    def test_sin_ratio_max_passes(self):
        report = check_cartesian_submaximality(catalog("sin-ratio-max"), TripleGrid(POSITIVE_GRID))
        self.assertTrue(report.passed)
        self.assertEqual(report.tuples_checked, 16 ** 3)

    def test_constant_passes(self):
        for points in ((1.0, 2.0), (-1.0, 0.5, 3.0)):
            report = check_cartesian_submaximality(catalog("constant:2"), TripleGrid(points))
            self.assertTrue(report.passed)
            self.assertGreater(report.tuples_checked, 0)

    def test_zero_sum_is_skipped(self):
        report = check_cartesian_submaximality(catalog("constant"), TripleGrid((1.0, -1.0)))
        # (1,-1,y) y (-1,1,y) para y en la grilla
        self.assertEqual(report.tuples_skipped, 4)
        self.assertEqual(report.tuples_checked, 4)

    def test_grid_sum_policies(self):
        h = GridSupremand((1.0, 2.0, 3.0), np.ones((3, 3)))
        report = check_cartesian_submaximality(h, TripleGrid(h.alphabet))
        self.assertEqual(report.tuples_checked, 9)
        self.assertEqual(report.tuples_skipped, 18)
        with self.assertRaises(ConditionError):
            check_cartesian_submaximality(
                h, TripleGrid(h.alphabet, SumPolicy.REQUIRE_IN_DOMAIN))

    def test_analytic_domain_policy(self):
        h = catalog("reciprocal-sum")
        report = check_cartesian_submaximality(h, TripleGrid((1.0, -0.5)))
        self.assertTrue(report.passed)
        self.assertGreater(report.tuples_skipped, 0)
        with self.assertRaises(ConditionError):
            check_cartesian_submaximality(h, TripleGrid((1.0, -0.5), SumPolicy.REQUIRE_IN_DOMAIN))

    def test_errors(self):
        with self.assertRaises(ConditionError):
            check_cartesian_submaximality(catalog("constant"), TripleGrid(()))
        with self.assertRaises(ConditionError):
            check_cartesian_submaximality(catalog("constant"), TripleGrid((1.0,)), tol=-1.0)

    def test_violations_in_order(self):
        h = GridSupremand((1.0, 2.0, 3.0),
                          np.array([[0.0, 0.0, 2.0], [0.0, 0.0, 2.0], [2.0, 2.0, 2.0]]))
        violations = list(iter_cartesian_violations(h, TripleGrid(h.alphabet)))
        self.assertEqual([v.arguments for v in violations],
                         [(1.0, 2.0, 1.0), (1.0, 2.0, 2.0), (2.0, 1.0, 1.0), (2.0, 1.0, 2.0)])
        report = check_cartesian_submaximality(h, TripleGrid(h.alphabet))
        self.assertEqual(report.witness.arguments, violations[0].arguments)
        self.assertEqual(report.witness.arguments, (1.0, 2.0, 1.0))

    def test_determinism(self):
        grid = TripleGrid(POSITIVE_GRID)
        first = check_cartesian_submaximality(catalog("sin-ratio-sum"), grid)
        second = check_cartesian_submaximality(catalog("sin-ratio-sum"), grid)
        self.assertEqual(first.to_items(), second.to_items())

    def test_hull_is_identity_on_symmetric_diagonal(self):
        rng = np.random.default_rng(4)
        alphabet = (1.0, 2.0, 3.0)
        for _ in range(30):
            h = hull(GridSupremand(alphabet, rng.integers(0, 4, size=(3, 3))))
            grid = TripleGrid(alphabet)
            self.assertEqual(check_cartesian_submaximality(h, grid).to_items(),
                             check_cartesian_submaximality(hull(h), grid).to_items())

    def test_tilde_extension_mixed_signs(self):
        report = check_cartesian_submaximality(catalog("sin-ratio-max-tilde"),
                                               TripleGrid((-1.0, 1.0, 2.0, 3.0)))
        self.assertTrue(report.passed)


class TestSeparateSubmaximality(unittest.TestCase):
    """Pruebas para check_separate_submaximality"""

    def test_catalog_examples_pass(self):
        for spec in ("sin-ratio-max", "sin-ratio-affine:0.5", "reciprocal-sum-star"):
            with self.subTest(spec=spec):
                report = check_separate_submaximality(load_supremand(spec),
                                                      TripleGrid(POSITIVE_GRID))
                self.assertTrue(report.passed)

    def test_sin_ratio_sum_fails(self):
        report = check_separate_submaximality(catalog("sin-ratio-sum"),
                                              TripleGrid((math.pi / 2, math.pi)))
        self.assertFalse(report.passed)
        self.assertEqual(report.witness.kind, "separate-submaximality")

    def test_separate_implies_cartesian(self):
        """Para h simétrico: pasa separada ⇒ pasa Cartesiana en la misma grilla"""
        rng = np.random.default_rng(17)
        alphabet = (1.0, 2.0, 3.0, 4.0)
        for _ in range(200):
            h = hull(GridSupremand(alphabet, rng.integers(0, 4, size=(4, 4))))
            grid = TripleGrid(alphabet)
            if check_separate_submaximality(h, grid).passed:
                self.assertTrue(check_cartesian_submaximality(h, grid).passed)


class TestSubmaximal1d(unittest.TestCase):
    """Pruebas para check_submaximal_1d"""

    def test_sin_ratio_passes(self):
        report = check_submaximal_1d(load_local_supremand("sin-ratio-1d"), POSITIVE_GRID)
        self.assertTrue(report.passed)

    def test_constant_and_negative_abs_pass(self):
        self.assertTrue(check_submaximal_1d(load_local_supremand("constant-1d:4"),
                                            (1.0, 2.0, 3.0)).passed)
        self.assertTrue(check_submaximal_1d(load_local_supremand("neg-abs-1d"),
                                            (1.0, 2.0, 3.0)).passed)

    def test_abs_fails(self):
        """El primer par en orden de grilla es (1,1); (1,2) también viola"""
        g = load_local_supremand("abs-1d")
        report = check_submaximal_1d(g, (1.0, 2.0, 3.0))
        self.assertFalse(report.passed)
        self.assertEqual(report.witness.arguments, (1.0, 1.0))
        self.assertTrue(exceeds(g(1.0 + 2.0), max(g(1.0), g(2.0)), 0.0))

    def test_opposite_pairs_skipped(self):
        report = check_submaximal_1d(load_local_supremand("abs-1d"), (1.0, -1.0))
        self.assertEqual(report.tuples_skipped, 2)


class TestLscNumeric(unittest.TestCase):
    """Pruebas para check_lsc_numeric"""

    def test_continuous_passes(self):
        report = check_lsc_numeric(catalog("sin-ratio-sum"), [(1.0, 1.0), (2.0, 0.5)])
        self.assertTrue(report.passed)
        self.assertEqual(report.tuples_checked, 2)
        self.assertEqual(report.parameters, {"delta": 1e-3, "net_density": 32})

    def test_upper_step_fails(self):
        h = load_supremand("user-expression:ifneg(x - 1, 0, 1)@0")
        report = check_lsc_numeric(h, [(1.0, 1.0)])
        self.assertFalse(report.passed)
        self.assertEqual(report.witness.arguments, (1.0, 1.0))
        self.assertEqual(report.witness.lhs, 1.0)
        self.assertEqual(report.witness.rhs, 0.0)
        self.assertLess(report.witness.companion[0], 1.0)

    def test_lower_step_passes(self):
        h = load_supremand("user-expression:ifneg(x - 1, 1, 0)@0")
        self.assertTrue(check_lsc_numeric(h, [(1.0, 1.0)]).passed)

    def test_steep_slope_beside_jump(self):
        """h(1, 1) = 10 y h → 0 por la izquierda a través de una pendiente empinada"""
        h = load_supremand("user-expression:ifneg(x - 1, 11000*(x - 1), 10)@-20000")
        report = check_lsc_numeric(h, [(1.0, 1.0)])
        self.assertEqual(report.verdict, Verdict.FAIL)
        self.assertEqual(report.witness.arguments, (1.0, 1.0))
        self.assertEqual(report.witness.lhs, 10.0)
        self.assertLess(report.witness.rhs, 0.0)
        compressed = check_lsc_numeric(compose(h, math.atan), [(1.0, 1.0)])
        self.assertEqual(compressed.verdict, Verdict.FAIL)
        self.assertEqual(compressed.witness.arguments, report.witness.arguments)

    def test_verdict_survives_compression(self):
        points = [(1.0, 1.0), (2.0, 0.5)]
        for spec in ("sin-ratio-sum",
                     "user-expression:ifneg(x - 1, 0, 1)@0",
                     "user-expression:ifneg(x - 1, 0, x)@0",
                     "user-expression:ifneg(x - 1, 11000*(x - 1), 10)@-20000",
                     "user-expression:-1000*((x - 1)*(x - 1) + (y - 1)*(y - 1))@-inf"):
            h = load_supremand(spec)
            for f in (math.atan, lambda t: t / 1000.0, lambda t: 1e6 * t):
                with self.subTest(spec=spec):
                    plain = check_lsc_numeric(h, points)
                    compressed = check_lsc_numeric(compose(h, f), points)
                    self.assertEqual(plain.verdict, compressed.verdict)
                    if plain.witness is not None:
                        self.assertEqual(plain.witness.arguments, compressed.witness.arguments)

    def test_jump_with_rising_upper_side_fails(self):
        h = load_supremand("user-expression:ifneg(x - 1, 0, x)@0")
        report = check_lsc_numeric(h, [(1.0, 1.0)])
        self.assertFalse(report.passed)
        self.assertEqual(report.witness.rhs, 0.0)

    def test_smooth_maximum_passes(self):
        h = load_supremand("user-expression:-1000*((x - 1)*(x - 1) + (y - 1)*(y - 1))@-inf")
        self.assertTrue(check_lsc_numeric(h, [(1.0, 1.0)]).passed)

    def test_grid_is_vacuous(self):
        h = GridSupremand((1.0, 2.0), np.zeros((2, 2)))
        report = check_lsc_numeric(h, [(1.0, 2.0), (2.0, 2.0)])
        self.assertTrue(report.passed)
        self.assertTrue(report.vacuous)
        self.assertEqual(report.tuples_skipped, 2)
        self.assertEqual(report.note, "lsc trivial on finite alphabet")

    def test_empty_net(self):
        h = load_supremand("user-expression:ifneg(abs(x - 1) - 1e-9, 0, 1/(x - x))@0")
        with self.assertRaises(ConditionError):
            check_lsc_numeric(h, [(1.0, 1.0)])

    def test_invalid_parameters(self):
        with self.assertRaises(ConditionError):
            check_lsc_numeric(catalog("constant"), [(1.0, 1.0)], delta=0.0)
        with self.assertRaises(ConditionError):
            check_lsc_numeric(catalog("constant"), [(1.0, 1.0)], net_density=1)


def run_tests():
    """Ejecuta todas las pruebas"""
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()

    suite.addTests(loader.loadTestsFromTestCase(TestTripleGrid))
    suite.addTests(loader.loadTestsFromTestCase(TestCartesianSubmaximality))
    suite.addTests(loader.loadTestsFromTestCase(TestSeparateSubmaximality))
    suite.addTests(loader.loadTestsFromTestCase(TestSubmaximal1d))
    suite.addTests(loader.loadTestsFromTestCase(TestLscNumeric))

    runner = unittest.TextTestRunner(verbosity=2)
    return runner.run(suite)


if __name__ == '__main__':
    result = run_tests()
    sys.exit(0 if result.wasSuccessful() else 1)
