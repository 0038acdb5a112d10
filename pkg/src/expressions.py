"""
Gramática Cerrada de Expresiones
Supremandos de usuario a partir de una cadena de una línea:
constantes, argumentos, + - * /, abs, sin, cos, max, min e ifneg
"""

import ast
import math
from typing import Callable, Dict, Tuple


class ExpressionError(ValueError):
    """Expresión fuera de la gramática permitida"""


CONSTANTS: Dict[str, float] = {
    "pi": math.pi,
    "inf": math.inf,
}

# Funciones permitidas y su número de argumentos (None = al menos dos)
FUNCTIONS: Dict[str, Tuple[Callable, object]] = {
    "abs": (abs, 1),
    "sin": (math.sin, 1),
    "cos": (math.cos, 1),
    "max": (max, None),
    "min": (min, None),
    # ifneg(e, a, b): a si e < 0, b en otro caso
    "ifneg": (None, 3),
}

_BINARY = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


class CompiledExpression:
    """Expresión validada y evaluable de forma determinista"""

    def __init__(self, source: str, variables: Tuple[str, ...]):
        self.source = source.strip()
        self.variables = variables
        try:
            tree = ast.parse(self.source, mode="eval")
        except SyntaxError as error:
            raise ExpressionError(f"Sintaxis inválida en '{self.source}': {error.msg}") from error
        self._validate(tree.body)
        self._tree = tree.body

    def __call__(self, *args: float) -> float:
        if len(args) != len(self.variables):
            raise ExpressionError(
                f"Se esperaban {len(self.variables)} argumentos, se recibieron {len(args)}"
            )
        env = dict(zip(self.variables, (float(a) for a in args)))
        return float(self._eval(self._tree, env))

    def __repr__(self):
        return f"CompiledExpression({self.source!r})"

    def _validate(self, node):
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, (int, float)):
                raise ExpressionError(f"Constante no numérica: {node.value!r}")
        elif isinstance(node, ast.Name):
            if node.id not in self.variables and node.id not in CONSTANTS:
                raise ExpressionError(f"Nombre desconocido: '{node.id}'")
        elif isinstance(node, ast.BinOp):
            if type(node.op) not in _BINARY:
                raise ExpressionError(f"Operador no permitido: {type(node.op).__name__}")
            self._validate(node.left)
            self._validate(node.right)
        elif isinstance(node, ast.UnaryOp):
            if not isinstance(node.op, (ast.USub, ast.UAdd)):
                raise ExpressionError(f"Operador no permitido: {type(node.op).__name__}")
            self._validate(node.operand)
        elif isinstance(node, ast.Call):
            if not isinstance(node.func, ast.Name) or node.func.id not in FUNCTIONS:
                raise ExpressionError(f"Función no permitida en '{self.source}'")
            if node.keywords:
                raise ExpressionError("No se admiten argumentos con nombre")
            arity = FUNCTIONS[node.func.id][1]
            if arity is None and len(node.args) < 2:
                raise ExpressionError(f"{node.func.id} requiere al menos dos argumentos")
            if arity is not None and len(node.args) != arity:
                raise ExpressionError(f"{node.func.id} requiere {arity} argumentos")
            for arg in node.args:
                self._validate(arg)
        else:
            raise ExpressionError(f"Construcción no permitida: {type(node).__name__}")

    def _eval(self, node, env: Dict[str, float]) -> float:
        if isinstance(node, ast.Constant):
            return float(node.value)
        if isinstance(node, ast.Name):
            return env[node.id] if node.id in env else CONSTANTS[node.id]
        if isinstance(node, ast.BinOp):
            return _BINARY[type(node.op)](self._eval(node.left, env), self._eval(node.right, env))
        if isinstance(node, ast.UnaryOp):
            operand = self._eval(node.operand, env)
            return -operand if isinstance(node.op, ast.USub) else operand
        name = node.func.id
        if name == "ifneg":
            # Solo se evalúa la rama elegida
            condition = self._eval(node.args[0], env)
            branch = node.args[1] if condition < 0 else node.args[2]
            return self._eval(branch, env)
        function = FUNCTIONS[name][0]
        return function(*(self._eval(arg, env) for arg in node.args))


def compile_expression(source: str, variables: Tuple[str, ...] = ("x", "y")) -> CompiledExpression:
    """Compila una expresión en las variables dadas"""
    return CompiledExpression(source, variables)


def evaluate_constant(source: str) -> float:
    """Evalúa una expresión sin variables, p. ej. 'pi/2' o '3*pi/8'"""
    try:
        return CompiledExpression(source, ())()
    except ZeroDivisionError as error:
        raise ExpressionError(f"División por cero en '{source}'") from error
