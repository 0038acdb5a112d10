"""
Pruebas Unitarias para Supremandos, Hull y Catálogo
"""

import unittest
import sys
import os
import math
import tempfile

import numpy as np

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from reports import BOTTOM, TOP
from supremand import (
    GridSupremand,
    LocalSupremand,
    SupremandError,
    catalog,
    catalog_entries,
    compose,
    dumps_grid_table,
    extend_positive_star,
    extend_positive_tilde,
    hull,
    hull_by_level_sets,
    is_diagonal,
    is_symmetric,
    load_local_supremand,
    load_supremand,
    parse_grid_table,
    restrict_to_grid,
    sublevel_set,
)


def asymmetric_grid():
    """h(1,1)=1, h(2,2)=2, h(2,1)=3, h(1,2)=0"""
    return GridSupremand((1.0, 2.0), np.array([[1.0, 0.0], [3.0, 2.0]]))


class TestGridSupremand(unittest.TestCase):
    """Pruebas para la clase GridSupremand"""

    def test_lookup_and_infimum(self):
        h = asymmetric_grid()
        self.assertEqual(h(2, 1), 3.0)
        self.assertEqual(h(1, 2), 0.0)
        self.assertEqual(h.declared_infimum, 0.0)
        self.assertEqual(h(0, 2), 0.0)

    def test_rounded_lookup(self):
        """Una suma de saltos con redondeo se ubica en el alfabeto"""
        h = GridSupremand((0.1, 0.2, 0.30000000000000004), np.zeros((3, 3)))
        self.assertTrue(h.contains(0.1 + 0.2))
        self.assertTrue(h.contains(0.3))
        self.assertFalse(h.contains(0.4))
        with self.assertRaises(SupremandError):
            h(0.4, 0.1)

    def test_invalid_tables(self):
        with self.assertRaises(SupremandError):
            GridSupremand((1.0, 2.0), np.zeros((3, 3)))
        with self.assertRaises(SupremandError):
            GridSupremand((0.0, 2.0), np.zeros((2, 2)))
        with self.assertRaises(SupremandError):
            GridSupremand((1.0, 1.0), np.zeros((2, 2)))
        with self.assertRaises(SupremandError):
            GridSupremand((1.0,), np.array([[math.nan]]))

    def test_table_is_read_only(self):
        h = asymmetric_grid()
        with self.assertRaises(ValueError):
            h.table[0, 0] = 5.0

    def test_equality(self):
        self.assertEqual(asymmetric_grid(), asymmetric_grid())
        self.assertNotEqual(asymmetric_grid(), hull(asymmetric_grid()))


class TestHull(unittest.TestCase):
    """Pruebas para el hull simétrico-diagonal"""

    def test_hull_formula(self):
        """ĥ(1,2) = ĥ(2,1) = 3 y la diagonal no cambia"""
        hat = hull(asymmetric_grid())
        self.assertEqual(hat(1, 2), 3.0)
        self.assertEqual(hat(2, 1), 3.0)
        self.assertEqual(hat(1, 1), 1.0)
        self.assertEqual(hat(2, 2), 2.0)

    def test_hull_is_idempotent_symmetric_diagonal(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            h = GridSupremand((1.0, 2.0, 3.0), rng.integers(0, 4, size=(3, 3)))
            hat = hull(h)
            self.assertEqual(hull(hat), hat)
            self.assertTrue(is_symmetric(hat).passed)
            self.assertTrue(is_diagonal(hat).passed)
            self.assertTrue(np.all(hat.table >= h.table))

    def test_level_set_hull_agrees(self):
        """La definición por conjuntos de subnivel coincide con la fórmula"""
        rng = np.random.default_rng(9)
        for _ in range(100):
            h = GridSupremand((1.0, 2.0, 3.0, 5.0), rng.normal(size=(4, 4)))
            self.assertEqual(hull_by_level_sets(h), hull(h))

    def test_sublevel_set(self):
        level = sublevel_set(asymmetric_grid(), 1.0)
        self.assertEqual(level, frozenset({(0, 0), (0, 1)}))

    def test_analytic_hull(self):
        h = load_supremand("user-expression:x - y@-inf")
        hat = hull(h)
        self.assertEqual(hat(1, 3), 2.0)
        self.assertEqual(hat(3, 1), 2.0)

    def test_top_dominates(self):
        h = GridSupremand((1.0, 2.0), np.array([[0.0, TOP], [BOTTOM, 0.0]]))
        hat = hull(h)
        self.assertEqual(hat(2, 1), TOP)


class TestSymmetryDiagonality(unittest.TestCase):
    """Pruebas para is_symmetric e is_diagonal"""

    def test_asymmetric_witness(self):
        report = is_symmetric(asymmetric_grid())
        self.assertFalse(report.passed)
        self.assertEqual(report.witness.arguments, (1.0, 2.0))
        self.assertEqual((report.witness.lhs, report.witness.rhs), (0.0, 3.0))

    def test_diagonal_witness(self):
        report = is_diagonal(asymmetric_grid())
        self.assertFalse(report.passed)
        self.assertEqual(report.witness.arguments, (1.0, 2.0))

    def test_analytic_requires_probe(self):
        h = catalog("sin-ratio-sum")
        with self.assertRaises(SupremandError):
            is_symmetric(h)
        report = is_symmetric(h, probe=[(1.0, 2.0), (0.5, 3.0)])
        self.assertTrue(report.passed)


class TestExtensions(unittest.TestCase):
    """Pruebas para las extensiones h̃, h⋆, composición y tabulación"""

    def test_star_extension(self):
        h = extend_positive_star(catalog("reciprocal-sum"))
        self.assertEqual(h(1, 1), 0.5)
        self.assertEqual(h(-1, 1), TOP)
        self.assertEqual(h(0, 1), 0.0)

    def test_tilde_extension(self):
        base = catalog("reciprocal-sum")
        h = extend_positive_tilde(base, probe=[(1.0, 1.0), (0.5, 0.5), (-1.0, 1.0)])
        self.assertEqual(h(-2, 3), 1.0)
        self.assertEqual(h(2, 2), 0.25)
        with self.assertRaises(SupremandError):
            extend_positive_tilde(base)

    def test_compose_preserves_sentinels(self):
        h = compose(catalog("sin-ratio-max"), math.atan)
        self.assertEqual(h(-1, 1), TOP)
        self.assertAlmostEqual(h(math.pi / 2, math.pi / 2), math.atan(2 / math.pi))
        grid = compose(asymmetric_grid(), math.atan)
        self.assertEqual(grid(2, 1), math.atan(3.0))

    def test_restrict_to_grid(self):
        h = restrict_to_grid(catalog("sin-ratio-sum"), (math.pi / 2, math.pi))
        self.assertAlmostEqual(h(math.pi, math.pi / 2), 2 / (3 * math.pi), places=15)


class TestGridText(unittest.TestCase):
    """Pruebas para el formato CSV de tablas"""

    def test_parse(self):
        text = "# tabla asimétrica\n1,2\n1,0\n3,2\n"
        self.assertEqual(parse_grid_table(text), asymmetric_grid())

    def test_round_trip_with_sentinels(self):
        h = GridSupremand((0.1, -math.pi), np.array([[1 / 3, TOP], [BOTTOM, 0.7]]))
        self.assertEqual(parse_grid_table(dumps_grid_table(h)), h)

    def test_constants_in_alphabet(self):
        h = parse_grid_table("pi/2,pi\n0,1\n1,0\n")
        self.assertEqual(h.alphabet, (math.pi / 2, math.pi))

    def test_malformed(self):
        with self.assertRaises(SupremandError):
            parse_grid_table("1,2\n0,0\n")
        with self.assertRaises(SupremandError):
            parse_grid_table("1,2\n0,a\n0,0\n")
        with self.assertRaises(SupremandError):
            parse_grid_table("")


class TestCatalog(unittest.TestCase):
    """Pruebas para el catálogo de supremandos"""

    def test_sin_ratio_sum(self):
        h = catalog("sin-ratio-sum")
        self.assertAlmostEqual(h(math.pi, math.pi / 2), 2 / (3 * math.pi), places=15)
        self.assertEqual(h.declared_infimum, -1.0)
        with self.assertRaises(SupremandError):
            h(1.0, -1.0)

    def test_quadrant_examples(self):
        h = catalog("sin-ratio-max")
        self.assertEqual(h(-1.0, 2.0), TOP)
        self.assertEqual(h(0.0, 2.0), 0.0)
        affine = load_supremand("sin-ratio-affine:0.25")
        expected = 0.25 * math.sin(1.0) + 0.75 * math.sin(2.0) / 2.0
        self.assertAlmostEqual(affine(1.0, 2.0), expected, places=15)

    def test_affine_parameter_validation(self):
        with self.assertRaises(SupremandError):
            load_supremand("sin-ratio-affine:1.5")
        with self.assertRaises(SupremandError):
            load_supremand("sin-ratio-affine")

    def test_reciprocal_sum_domain(self):
        h = catalog("reciprocal-sum")
        with self.assertRaises(SupremandError):
            h(-1.0, 2.0)

    def test_user_grid_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "table.csv")
            with open(path, "w", encoding="utf-8") as f:
                f.write(dumps_grid_table(asymmetric_grid()))
            h = load_supremand(f"user-grid:{path}")
            self.assertEqual(h, asymmetric_grid())
            self.assertEqual(h.spec, f"user-grid:{path}")
        with self.assertRaises(SupremandError):
            load_supremand("user-grid:/no/existe.csv")

    def test_user_expression(self):
        h = load_supremand("user-expression:abs(x)+abs(y)@0")
        self.assertEqual(h(-1, 2), 3.0)
        self.assertEqual(h.declared_infimum, 0.0)
        with self.assertRaises(SupremandError):
            load_supremand("user-expression:x+y")
        with self.assertRaises(SupremandError):
            load_supremand("user-expression:1/(x-y)@0")(1.0, 1.0)

    def test_local_entries(self):
        g = load_local_supremand("sin-ratio-1d")
        self.assertIsInstance(g, LocalSupremand)
        self.assertEqual(g(0.0), -1.0)
        self.assertEqual(load_local_supremand("abs-1d")(-3.0), 3.0)
        with self.assertRaises(SupremandError):
            load_supremand("abs-1d")
        with self.assertRaises(SupremandError):
            load_local_supremand("sin-ratio-sum")

    def test_unknown_entry(self):
        with self.assertRaises(SupremandError):
            catalog("no-existe")

    def test_entries_listed(self):
        names = {entry.name for entry in catalog_entries()}
        for name in ("sin-ratio-sum", "sin-ratio-max", "sin-ratio-affine", "user-grid",
                     "user-expression", "constant", "abs-1d"):
            self.assertIn(name, names)


def run_tests():
    """Ejecuta todas las pruebas"""
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()

    suite.addTests(loader.loadTestsFromTestCase(TestGridSupremand))
    suite.addTests(loader.loadTestsFromTestCase(TestHull))
    suite.addTests(loader.loadTestsFromTestCase(TestSymmetryDiagonality))
    suite.addTests(loader.loadTestsFromTestCase(TestExtensions))
    suite.addTests(loader.loadTestsFromTestCase(TestGridText))
    suite.addTests(loader.loadTestsFromTestCase(TestCatalog))

    runner = unittest.TextTestRunner(verbosity=2)
    return runner.run(suite)


if __name__ == '__main__':
    result = run_tests()
    sys.exit(0 if result.wasSuccessful() else 1)
