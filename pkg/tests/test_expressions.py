"""
Pruebas Unitarias para la Gramática de Expresiones
"""

import unittest
import sys
import os
import math

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from expressions import ExpressionError, compile_expression, evaluate_constant


class TestCompileExpression(unittest.TestCase):
    """Pruebas para compile_expression"""

    def test_arithmetic(self):
        expression = compile_expression("x * y + 2 / x - -1")
        self.assertEqual(expression(2, 3), 8.0)

    def test_functions(self):
        expression = compile_expression("abs(sin(x + y)) / (x + y)")
        self.assertAlmostEqual(expression(math.pi / 2, math.pi), 2 / (3 * math.pi), places=15)
        self.assertEqual(compile_expression("max(x, y, 0)")(-1, -2), 0.0)
        self.assertEqual(compile_expression("min(x, y)")(-1, -2), -2.0)
        self.assertAlmostEqual(compile_expression("cos(pi)", ())(), -1.0)

    def test_ifneg_is_lazy(self):
        """ifneg solo evalúa la rama elegida"""
        expression = compile_expression("ifneg(x, 1 / y, 7)")
        self.assertEqual(expression(1, 0), 7.0)
        self.assertEqual(expression(-1, 4), 0.25)

    def test_one_variable(self):
        expression = compile_expression("abs(x)", ("x",))
        self.assertEqual(expression(-3), 3.0)
        with self.assertRaises(ExpressionError):
            expression(1, 2)

    def test_rejected_constructs(self):
        """Fuera de la gramática: potencias, atributos, nombres y llamadas ajenas"""
        for source in ("x ** 2", "x.real", "z + 1", "exp(x)", "__import__('os')",
                       "[x]", "x if y else 1", "'a'", "max(x)", "abs(x, y)", "True"):
            with self.subTest(source=source):
                with self.assertRaises(ExpressionError):
                    compile_expression(source)

    def test_syntax_error(self):
        with self.assertRaises(ExpressionError):
            compile_expression("x +")


class TestEvaluateConstant(unittest.TestCase):
    """Pruebas para evaluate_constant"""

    def test_pi_multiples(self):
        self.assertEqual(evaluate_constant("pi/2"), math.pi / 2)
        self.assertEqual(evaluate_constant("3*pi/8"), 3 * math.pi / 8)
        self.assertEqual(evaluate_constant("-inf"), -math.inf)

    def test_variables_rejected(self):
        with self.assertRaises(ExpressionError):
            evaluate_constant("x")

    def test_division_by_zero(self):
        with self.assertRaises(ExpressionError):
            evaluate_constant("1/0")


def run_tests():
    """Ejecuta todas las pruebas"""
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()

    suite.addTests(loader.loadTestsFromTestCase(TestCompileExpression))
    suite.addTests(loader.loadTestsFromTestCase(TestEvaluateConstant))

    runner = unittest.TextTestRunner(verbosity=2)
    return runner.run(suite)


if __name__ == '__main__':
    result = run_tests()
    sys.exit(0 if result.wasSuccessful() else 1)
