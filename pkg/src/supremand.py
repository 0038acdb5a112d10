"""
Supremandos
Densidades h de dos argumentos, el hull simétrico-diagonal, las extensiones
al plano y el catálogo de ejemplos
"""

import csv
import io
import logging
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

import numpy as np

from expressions import ExpressionError, compile_expression, evaluate_constant
from reports import BOTTOM, TOP, CheckReport, Verdict, ViolationWitness, format_real, slack

logger = logging.getLogger(__name__)

DEFAULT_TOL_ANALYTIC = 1e-12
DEFAULT_TOL_GRID = 0.0

# Tolerancia relativa para ubicar un salto calculado dentro del alfabeto
ALPHABET_RTOL = 1e-9


class SupremandError(ValueError):
    """Evaluación fuera de dominio o entrada de catálogo inválida"""


class DomainNote(Enum):
    """Dominio declarado del supremando"""
    FULL_PLANE = "full-plane"
    PUNCTURED_PLANE = "punctured-plane"
    POSITIVE_QUADRANT = "positive-quadrant"


def _extend(f: Callable[[float], float]) -> Callable[[float], float]:
    """Extiende f creciente a ℝ̄ fijando f(±inf) = ±inf"""
    def extended(value: float) -> float:
        return value if math.isinf(value) else float(f(value))
    return extended


@dataclass(frozen=True)
class Supremand:
    """Supremando analítico h(ξ, η) con su convención en cero"""
    name: str
    evaluator: Callable[[float, float], float] = field(repr=False, compare=False)
    declared_infimum: float
    domain_note: DomainNote = DomainNote.PUNCTURED_PLANE
    # None: se usa el ínfimo declarado, h(ζ,0) = h(0,θ) = inf h
    zero_convention: Optional[float] = None
    description: str = ""
    spec: str = ""

    @property
    def zero_value(self) -> float:
        return self.declared_infimum if self.zero_convention is None else self.zero_convention

    def __call__(self, x: float, y: float) -> float:
        if x == 0 or y == 0:
            return self.zero_value
        try:
            value = float(self.evaluator(x, y))
        except ZeroDivisionError as error:
            raise SupremandError(f"{self.name} no está definido en ({x!r}, {y!r})") from error
        if math.isnan(value):
            raise SupremandError(f"{self.name} produjo NaN en ({x!r}, {y!r})")
        return value


@dataclass(frozen=True, eq=False)
class GridSupremand:
    """Supremando tabulado sobre un alfabeto finito de saltos no nulos"""
    alphabet: Tuple[float, ...]
    table: np.ndarray = field(repr=False)
    name: str = "user-grid"
    spec: str = ""
    _index: Dict[float, int] = field(init=False, repr=False)

    def __post_init__(self):
        alphabet = tuple(float(a) for a in self.alphabet)
        table = np.array(self.table, dtype=float)
        if table.shape != (len(alphabet), len(alphabet)):
            raise SupremandError(
                f"La tabla {table.shape} no coincide con el alfabeto de {len(alphabet)} valores"
            )
        if any(a == 0 for a in alphabet):
            raise SupremandError("El alfabeto no admite el valor 0")
        if len(set(alphabet)) != len(alphabet):
            raise SupremandError("El alfabeto tiene valores repetidos")
        if np.isnan(table).any():
            raise SupremandError("La tabla contiene NaN")
        table.setflags(write=False)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(alphabet)})

    def __eq__(self, other):
        if not isinstance(other, GridSupremand):
            return NotImplemented
        return self.alphabet == other.alphabet and np.array_equal(self.table, other.table)

    __hash__ = None

    @property
    def declared_infimum(self) -> float:
        return float(self.table.min())

    @property
    def zero_value(self) -> float:
        return self.declared_infimum

    def contains(self, x: float) -> bool:
        try:
            self.index_of(x)
        except SupremandError:
            return False
        return True

    def index_of(self, x: float) -> int:
        """Índice de x en el alfabeto (tolerando redondeo de sumas de saltos)"""
        index = self._index.get(x)
        if index is not None:
            return index
        close = np.flatnonzero(np.isclose(self.alphabet, x, rtol=ALPHABET_RTOL, atol=0.0))
        if close.size:
            return int(close[0])
        raise SupremandError(f"El salto {x!r} no pertenece al alfabeto {self.alphabet}")

    def __call__(self, x: float, y: float) -> float:
        if x == 0 or y == 0:
            return self.zero_value
        return float(self.table[self.index_of(x), self.index_of(y)])

    def fingerprint(self) -> str:
        """Identificación reproducible: alfabeto y tabla fila por fila"""
        rows = ";".join(",".join(format_real(v) for v in row) for row in self.table)
        return f"alphabet={','.join(format_real(a) for a in self.alphabet)}|table={rows}"


@dataclass(frozen=True)
class LocalSupremand:
    """Densidad g de un argumento para el funcional local G"""
    name: str
    evaluator: Callable[[float], float] = field(repr=False, compare=False)
    declared_infimum: float
    description: str = ""
    spec: str = ""

    def __call__(self, x: float) -> float:
        if x == 0:
            # g(0) = inf g
            return self.declared_infimum
        try:
            value = float(self.evaluator(x))
        except ZeroDivisionError as error:
            raise SupremandError(f"{self.name} no está definido en {x!r}") from error
        if math.isnan(value):
            raise SupremandError(f"{self.name} produjo NaN en {x!r}")
        return value


AnySupremand = Union[Supremand, GridSupremand]


# ---------------------------------------------------------------------------
# Hull simétrico-diagonal
# ---------------------------------------------------------------------------

def hull(h: AnySupremand) -> AnySupremand:
    """ĥ(ξ,η) = max{h(ξ,ξ), h(η,η), h(η,ξ), h(ξ,η)} punto a punto"""
    if isinstance(h, GridSupremand):
        table = h.table
        diagonal = np.diag(table)
        hat = np.maximum.reduce([
            np.broadcast_to(diagonal[:, None], table.shape),
            np.broadcast_to(diagonal[None, :], table.shape),
            table.T,
            table,
        ])
        return GridSupremand(h.alphabet, hat, name=f"hull({h.name})", spec=h.spec)

    def hat(x: float, y: float) -> float:
        return max(h(x, x), h(y, y), h(y, x), h(x, y))

    return Supremand(
        name=f"hull({h.name})",
        evaluator=hat,
        declared_infimum=h.declared_infimum,
        domain_note=h.domain_note,
        zero_convention=h.zero_convention,
        description=f"Hull simétrico-diagonal de {h.name}",
        spec=h.spec,
    )


def sublevel_set(h: GridSupremand, c: float) -> FrozenSet[Tuple[int, int]]:
    """L_c(h) = {(i, j) : h(a_i, a_j) <= c} como pares de índices"""
    rows, cols = np.nonzero(h.table <= c)
    return frozenset(zip(rows.tolist(), cols.tolist()))


def hull_by_level_sets(h: GridSupremand) -> GridSupremand:
    """
    Hull por conjuntos de subnivel: ĥ(ζ,η) = inf{c : (ζ,η) ∈ Ê(L_c(h))},
    con Ê = {(ξ,η) ∈ E : (ξ,ξ), (η,η), (η,ξ) ∈ E}.

    En un alfabeto finito el ínfimo se alcanza en un valor de la tabla, así
    que basta recorrer los niveles en orden creciente.
    """
    size = len(h.alphabet)
    hat = np.full((size, size), np.nan)
    for c in np.unique(h.table):
        level = sublevel_set(h, c)
        for i in range(size):
            for j in range(size):
                if np.isnan(hat[i, j]) and {(i, j), (i, i), (j, j), (j, i)} <= level:
                    hat[i, j] = c
    return GridSupremand(h.alphabet, hat, name=f"hull({h.name})", spec=h.spec)


def _values_match(a: float, b: float, tol: float) -> bool:
    if not (math.isfinite(a) and math.isfinite(b)):
        return a == b
    return abs(a - b) <= tol


def _default_tol(h) -> float:
    return DEFAULT_TOL_GRID if isinstance(h, GridSupremand) else DEFAULT_TOL_ANALYTIC


def _probe_pairs(h, probe: Optional[Sequence[Tuple[float, float]]]) -> List[Tuple[float, float]]:
    if probe is not None:
        pairs = [(float(x), float(y)) for x, y in probe]
    elif isinstance(h, GridSupremand):
        pairs = [(x, y) for x in h.alphabet for y in h.alphabet]
    else:
        raise SupremandError("Un supremando analítico requiere una lista de pares de prueba")
    if any(x == 0 or y == 0 for x, y in pairs):
        raise SupremandError("Los pares de prueba deben tener coordenadas no nulas")
    return pairs


def _compare_pointwise(check: str, pairs, left: Callable, right: Callable,
                       tol: float) -> CheckReport:
    for x, y in pairs:
        a, b = left(x, y), right(x, y)
        if not _values_match(a, b, tol):
            witness = ViolationWitness(check, (x, y), a, b, slack(a, b))
            return CheckReport(check, Verdict.FAIL, witness, tuples_checked=len(pairs),
                               tolerance=tol)
    return CheckReport(check, Verdict.PASS, tuples_checked=len(pairs), tolerance=tol)


def is_symmetric(h: AnySupremand, probe: Optional[Sequence[Tuple[float, float]]] = None,
                 tol: Optional[float] = None) -> CheckReport:
    """h(ξ,η) = h(η,ξ) en cada par de prueba; el testigo es el primer par que falla"""
    tol = _default_tol(h) if tol is None else tol
    return _compare_pointwise("symmetry", _probe_pairs(h, probe), h, lambda x, y: h(y, x), tol)


def is_diagonal(h: AnySupremand, probe: Optional[Sequence[Tuple[float, float]]] = None,
                tol: Optional[float] = None) -> CheckReport:
    """h = ĥ en cada par de prueba; el testigo reporta (ĥ, h)"""
    tol = _default_tol(h) if tol is None else tol
    hat = hull(h)
    return _compare_pointwise("diagonality", _probe_pairs(h, probe), hat, h, tol)


# ---------------------------------------------------------------------------
# Extensiones desde el cuadrante positivo y composición monótona
# ---------------------------------------------------------------------------

def extend_positive_tilde(h: Supremand, supremum: Optional[float] = None,
                          probe: Optional[Sequence[Tuple[float, float]]] = None) -> Supremand:
    """
    h̃ = h en ℝ⁺×ℝ⁺ y el supremo de h en el cuadrante en otro caso.

    El supremo se recibe explícitamente o se estima como el máximo sobre los
    pares positivos de la lista de prueba.
    """
    if supremum is None:
        positive = [(x, y) for x, y in (probe or []) if x > 0 and y > 0]
        if not positive:
            raise SupremandError("No se puede determinar el supremo de h en el cuadrante positivo")
        supremum = max(h(x, y) for x, y in positive)

    def tilde(x: float, y: float) -> float:
        if x > 0 and y > 0:
            return h(x, y)
        return supremum

    return Supremand(
        name=f"tilde({h.name})",
        evaluator=tilde,
        declared_infimum=min(h.declared_infimum, supremum),
        domain_note=DomainNote.FULL_PLANE,
        description=f"Extensión por supremo ({format_real(supremum)}) de {h.name}",
        spec=h.spec,
    )


def extend_positive_star(h: Supremand) -> Supremand:
    """h⋆ = h en ℝ⁺×ℝ⁺, 0 en los ejes y +inf en otro caso"""
    def star(x: float, y: float) -> float:
        if x > 0 and y > 0:
            return h(x, y)
        return TOP

    return Supremand(
        name=f"star({h.name})",
        evaluator=star,
        declared_infimum=min(h.declared_infimum, 0.0),
        domain_note=DomainNote.FULL_PLANE,
        zero_convention=0.0,
        description=f"Extensión h⋆ de {h.name}",
        spec=h.spec,
    )


def compose(h: AnySupremand, f: Callable[[float], float]) -> AnySupremand:
    """f ∘ h con f estrictamente creciente, extendida con f(±inf) = ±inf"""
    f_ext = _extend(f)
    if isinstance(h, GridSupremand):
        table = np.array([[f_ext(float(v)) for v in row] for row in h.table])
        return GridSupremand(h.alphabet, table, name=f"f∘{h.name}", spec=h.spec)
    return Supremand(
        name=f"f∘{h.name}",
        evaluator=lambda x, y: f_ext(h(x, y)),
        declared_infimum=f_ext(h.declared_infimum),
        domain_note=h.domain_note,
        zero_convention=None if h.zero_convention is None else f_ext(h.zero_convention),
        description=f"Composición monótona de {h.name}",
        spec=h.spec,
    )


def restrict_to_grid(h: Supremand, alphabet: Sequence[float]) -> GridSupremand:
    """Tabula un supremando analítico sobre un alfabeto finito"""
    alphabet = tuple(float(a) for a in alphabet)
    table = [[h(x, y) for y in alphabet] for x in alphabet]
    return GridSupremand(alphabet, np.array(table), name=f"{h.name}|grid", spec=h.spec)


# ---------------------------------------------------------------------------
# Formato de texto de tablas
# ---------------------------------------------------------------------------

def _parse_token(token: str) -> float:
    token = token.strip()
    try:
        return float(token)
    except ValueError:
        pass
    try:
        return evaluate_constant(token)
    except ExpressionError as error:
        raise SupremandError(f"Valor no numérico en la tabla: '{token}'") from error


def parse_grid_table(text: str, name: str = "user-grid", spec: str = "") -> GridSupremand:
    """Primera fila: alfabeto; filas siguientes: la matriz. 'inf'/'-inf' son TOP/BOTTOM"""
    rows = [
        row for row in csv.reader(io.StringIO(text))
        if row and not row[0].strip().startswith("#")
    ]
    if not rows:
        raise SupremandError("Tabla vacía")
    alphabet = [_parse_token(t) for t in rows[0]]
    matrix = [[_parse_token(t) for t in row] for row in rows[1:]]
    if len(matrix) != len(alphabet) or any(len(r) != len(alphabet) for r in matrix):
        raise SupremandError(
            f"Se esperaba una matriz {len(alphabet)}x{len(alphabet)} después del alfabeto"
        )
    return GridSupremand(tuple(alphabet), np.array(matrix), name=name, spec=spec)


def dumps_grid_table(h: GridSupremand) -> str:
    """Inverso exacto de parse_grid_table"""
    lines = [",".join(format_real(a) for a in h.alphabet)]
    lines.extend(",".join(format_real(v) for v in row) for row in h.table)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Catálogo
# ---------------------------------------------------------------------------

def sin_ratio(x: float) -> float:
    """g(x) = |sin x| / x, con x ≠ 0"""
    return abs(math.sin(x)) / x


def _quadrant_branches(core: Callable[[float, float], float]) -> Callable[[float, float], float]:
    """core en ℝ⁺×ℝ⁺ y +inf fuera; los ejes los resuelve la convención en cero"""
    def evaluator(w: float, y: float) -> float:
        if w > 0 and y > 0:
            return core(w, y)
        return TOP
    return evaluator


def _sin_ratio_sum(x: float, y: float) -> float:
    s = x + y
    if s == 0:
        raise SupremandError(f"sin-ratio-sum no está definido en x + y = 0 ({x!r}, {y!r})")
    return sin_ratio(s)


def _reciprocal_sum(w: float, y: float) -> float:
    if not (w > 0 and y > 0):
        raise SupremandError(f"reciprocal-sum solo está definido en ℝ⁺×ℝ⁺, no en ({w!r}, {y!r})")
    return 1.0 / (w + y)


@dataclass(frozen=True)
class CatalogEntry:
    """Entrada del catálogo de supremandos"""
    name: str
    description: str
    builder: Callable[[Optional[str]], object] = field(repr=False)
    parameter: str = ""
    parameter_required: bool = False
    local: bool = False


class SupremandCatalog:
    """Catálogo de supremandos de ejemplo y de usuario"""

    def __init__(self):
        self.entries: Dict[str, CatalogEntry] = {}
        self._initialize_catalog()

    def _initialize_catalog(self):
        """Registra los ejemplos, el contraejemplo y las entradas de usuario"""

        self.register(CatalogEntry(
            "sin-ratio-sum",
            "|sin(x+y)|/(x+y): composición de g submaximal con la suma, no Cartesiano submaximal",
            self._build_sin_ratio_sum,
        ))
        self.register(CatalogEntry(
            "sin-ratio-max",
            "max{|sin w|/w, |sin y|/y} en ℝ⁺×ℝ⁺, 0 en los ejes, +inf en otro caso",
            self._build_sin_ratio_max,
        ))
        self.register(CatalogEntry(
            "sin-ratio-affine",
            "α|sin w|/w + (1-α)|sin y|/y en ℝ⁺×ℝ⁺, 0 en los ejes, +inf en otro caso",
            self._build_sin_ratio_affine,
            parameter="α ∈ (0,1)",
            parameter_required=True,
        ))
        self.register(CatalogEntry(
            "sin-ratio-max-tilde",
            "Extensión h̃ de max{|sin w|/w, |sin y|/y} por su supremo 1",
            self._build_sin_ratio_max_tilde,
        ))
        self.register(CatalogEntry(
            "reciprocal-sum",
            "1/(w+y) solo en ℝ⁺×ℝ⁺",
            self._build_reciprocal_sum,
        ))
        self.register(CatalogEntry(
            "reciprocal-sum-star",
            "Extensión h⋆ de 1/(w+y): 0 en los ejes, +inf fuera del cuadrante",
            lambda param: extend_positive_star(self._build_reciprocal_sum(param)),
        ))
        self.register(CatalogEntry(
            "constant",
            "h ≡ c",
            self._build_constant,
            parameter="c",
        ))
        self.register(CatalogEntry(
            "user-grid",
            "Tabla leída de un archivo CSV (primera fila: alfabeto)",
            self._build_user_grid,
            parameter="ruta",
            parameter_required=True,
        ))
        self.register(CatalogEntry(
            "user-expression",
            "Expresión en x, y con ínfimo declarado: EXPR@INF",
            self._build_user_expression,
            parameter="EXPR@INF",
            parameter_required=True,
        ))

        # Densidades de un argumento para G
        self.register(CatalogEntry(
            "sin-ratio-1d", "g(x) = |sin x|/x", self._build_sin_ratio_1d, local=True,
        ))
        self.register(CatalogEntry(
            "abs-1d", "g(x) = |x|",
            lambda param: LocalSupremand("abs-1d", abs, 0.0, "g(x) = |x|", "abs-1d"),
            local=True,
        ))
        self.register(CatalogEntry(
            "neg-abs-1d", "g(x) = -|x|",
            lambda param: LocalSupremand("neg-abs-1d", lambda x: -abs(x), BOTTOM,
                                         "g(x) = -|x|", "neg-abs-1d"),
            local=True,
        ))
        self.register(CatalogEntry(
            "constant-1d", "g ≡ c", self._build_constant_1d, parameter="c", local=True,
        ))
        self.register(CatalogEntry(
            "user-expression-1d", "Expresión en x con ínfimo declarado: EXPR@INF",
            self._build_user_expression_1d, parameter="EXPR@INF", parameter_required=True,
            local=True,
        ))

    def register(self, entry: CatalogEntry):
        """Registra una entrada nueva en el catálogo"""
        self.entries[entry.name] = entry

    def get_entry(self, name: str) -> Optional[CatalogEntry]:
        return self.entries.get(name)

    def get_all_entries(self) -> List[CatalogEntry]:
        return list(self.entries.values())

    def build(self, name: str, param: Optional[str] = None):
        """Construye el supremando `name` con su parámetro opcional"""
        entry = self.entries.get(name)
        if entry is None:
            raise SupremandError(
                f"Supremando desconocido '{name}'. Disponibles: {', '.join(sorted(self.entries))}"
            )
        if entry.parameter_required and param is None:
            raise SupremandError(f"'{name}' requiere parámetro: {entry.parameter}")
        supremand = entry.builder(param)
        logger.debug("Supremando construido: %s", supremand.name)
        return supremand

    # -- constructores ------------------------------------------------------

    @staticmethod
    def _build_sin_ratio_sum(param):
        # |sin s|/s → -1 cuando s → 0⁻: ese es el ínfimo en el plano perforado.
        # Las variantes restringidas a ℝ⁺×ℝ⁺ declaran 0 (DESIGN.md, decisión 2)
        return Supremand(
            "sin-ratio-sum", _sin_ratio_sum, declared_infimum=-1.0,
            domain_note=DomainNote.PUNCTURED_PLANE,
            description="|sin(x+y)|/(x+y)", spec="sin-ratio-sum",
        )

    @staticmethod
    def _build_sin_ratio_max(param):
        return Supremand(
            "sin-ratio-max",
            _quadrant_branches(lambda w, y: max(sin_ratio(w), sin_ratio(y))),
            declared_infimum=0.0, domain_note=DomainNote.FULL_PLANE, zero_convention=0.0,
            description="max{|sin w|/w, |sin y|/y}", spec="sin-ratio-max",
        )

    @staticmethod
    def _build_sin_ratio_affine(param):
        alpha = _parse_token(param)
        if not 0 < alpha < 1:
            raise SupremandError(f"α debe estar en (0,1), se recibió {alpha!r}")
        return Supremand(
            f"sin-ratio-affine({format_real(alpha)})",
            _quadrant_branches(lambda w, y: alpha * sin_ratio(w) + (1 - alpha) * sin_ratio(y)),
            declared_infimum=0.0, domain_note=DomainNote.FULL_PLANE, zero_convention=0.0,
            description="α|sin w|/w + (1-α)|sin y|/y", spec=f"sin-ratio-affine:{param}",
        )

    @staticmethod
    def _build_sin_ratio_max_tilde(param):
        base = Supremand(
            "sin-ratio-max+",
            lambda w, y: max(sin_ratio(w), sin_ratio(y)),
            declared_infimum=0.0, domain_note=DomainNote.POSITIVE_QUADRANT,
        )
        # sup de max{g(w), g(y)} en ℝ⁺×ℝ⁺ es 1 (límite en 0, no alcanzado)
        tilde = extend_positive_tilde(base, supremum=1.0)
        return replace(tilde, name="sin-ratio-max-tilde", spec="sin-ratio-max-tilde")

    @staticmethod
    def _build_reciprocal_sum(param):
        return Supremand(
            "reciprocal-sum", _reciprocal_sum, declared_infimum=0.0,
            domain_note=DomainNote.POSITIVE_QUADRANT,
            description="1/(w+y)", spec="reciprocal-sum",
        )

    @staticmethod
    def _build_constant(param):
        c = 0.0 if param is None else _parse_token(param)
        return Supremand(
            f"constant({format_real(c)})", lambda x, y: c, declared_infimum=c,
            domain_note=DomainNote.FULL_PLANE, description="h ≡ c",
            spec="constant" if param is None else f"constant:{param}",
        )

    @staticmethod
    def _build_user_grid(param):
        try:
            with open(param, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as error:
            raise SupremandError(f"No se pudo leer la tabla '{param}': {error}") from error
        return parse_grid_table(text, name=f"user-grid({param})", spec=f"user-grid:{param}")

    @staticmethod
    def _split_infimum(param: str) -> Tuple[str, float]:
        source, sep, infimum = param.rpartition("@")
        if not sep:
            raise SupremandError("Declarar el ínfimo del supremando de usuario: EXPR@INF")
        return source, _parse_token(infimum)

    def _build_user_expression(self, param):
        source, infimum = self._split_infimum(param)
        expression = compile_expression(source, ("x", "y"))
        return Supremand(
            f"user-expression({expression.source})", expression, declared_infimum=infimum,
            domain_note=DomainNote.PUNCTURED_PLANE, description=expression.source,
            spec=f"user-expression:{param}",
        )

    @staticmethod
    def _build_sin_ratio_1d(param):
        return LocalSupremand("sin-ratio-1d", sin_ratio, -1.0, "|sin x|/x", "sin-ratio-1d")

    @staticmethod
    def _build_constant_1d(param):
        c = 0.0 if param is None else _parse_token(param)
        return LocalSupremand(
            f"constant-1d({format_real(c)})", lambda x: c, c, "g ≡ c",
            "constant-1d" if param is None else f"constant-1d:{param}",
        )

    def _build_user_expression_1d(self, param):
        source, infimum = self._split_infimum(param)
        expression = compile_expression(source, ("x",))
        return LocalSupremand(
            f"user-expression-1d({expression.source})", expression, infimum,
            expression.source, f"user-expression-1d:{param}",
        )


_CATALOG = SupremandCatalog()


def catalog(name: str, params: Optional[str] = None):
    """Construye una entrada del catálogo por nombre"""
    return _CATALOG.build(name, params)


def load_supremand(spec: str) -> AnySupremand:
    """Resuelve '<nombre>[:parámetro]' a un supremando de dos argumentos"""
    name, sep, param = spec.partition(":")
    entry = _CATALOG.get_entry(name)
    if entry is not None and entry.local:
        raise SupremandError(f"'{name}' es una densidad de un argumento; usar --local")
    return _CATALOG.build(name, param if sep else None)


def load_local_supremand(spec: str) -> LocalSupremand:
    """Resuelve '<nombre>[:parámetro]' a una densidad de un argumento"""
    name, sep, param = spec.partition(":")
    entry = _CATALOG.get_entry(name)
    if entry is not None and not entry.local:
        raise SupremandError(f"'{name}' es un supremando de dos argumentos")
    return _CATALOG.build(name, param if sep else None)


def catalog_entries() -> List[CatalogEntry]:
    return _CATALOG.get_all_entries()
