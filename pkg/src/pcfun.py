"""
Funciones Constantes a Trozos
Intervalos, funciones escalonadas, saltos, distancia L1 y las sucesiones
de la demostración del teorema de semicontinuidad
"""

import bisect
import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

logger = logging.getLogger(__name__)


class StepFunctionError(ValueError):
    """Partición inválida o parámetros de sucesión inadmisibles"""


@dataclass(frozen=True)
class Interval:
    """Intervalo abierto y acotado I = (a, b)"""
    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise StepFunctionError(f"El intervalo debe ser finito: ({self.a}, {self.b})")
        if not self.a < self.b:
            raise StepFunctionError(f"Se requiere a < b, se recibió ({self.a}, {self.b})")

    @property
    def length(self) -> float:
        return self.b - self.a

    def contains(self, t: float) -> bool:
        """Pertenencia estricta al interior"""
        return self.a < t < self.b


@dataclass(frozen=True)
class JumpProfile:
    """Lista ordenada de saltos [u](t_i) = v_i - v_{i-1}"""
    jumps: Tuple[float, ...] = ()

    def __post_init__(self):
        if any(j == 0 for j in self.jumps):
            raise StepFunctionError("Un perfil de saltos no admite saltos nulos")

    def __len__(self) -> int:
        return len(self.jumps)

    def __iter__(self):
        return iter(self.jumps)

    def __getitem__(self, index):
        return self.jumps[index]

    def total(self) -> float:
        """Suma telescópica de los saltos"""
        return math.fsum(self.jumps)


@dataclass(frozen=True)
class StepFunction:
    """
    Función constante a trozos u ∈ PC(I).

    Los valores se guardan por trozo; la semántica es casi en todas partes,
    de modo que el valor en un breakpoint nunca es observable. Construir
    siempre con make_step_function, que normaliza el conjunto de saltos.
    """
    interval: Interval
    breakpoints: Tuple[float, ...]
    values: Tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != len(self.breakpoints) + 1:
            raise StepFunctionError(
                f"Se esperaban {len(self.breakpoints) + 1} valores, "
                f"se recibieron {len(self.values)}"
            )
        for left, right in zip(self.values, self.values[1:]):
            if left == right:
                raise StepFunctionError("Valores adyacentes iguales: usar make_step_function")

    @property
    def jump_set(self) -> Tuple[float, ...]:
        """S(u): el conjunto minimal de puntos de discontinuidad"""
        return self.breakpoints

    def pieces(self) -> List[Tuple[float, float, float]]:
        """Lista de (extremo izquierdo, extremo derecho, valor)"""
        edges = (self.interval.a,) + self.breakpoints + (self.interval.b,)
        return [(edges[i], edges[i + 1], self.values[i]) for i in range(len(self.values))]

    def value_at(self, t: float) -> float:
        """Valor en t (trozos cerrados a izquierda, solo uso interno a.e.)"""
        if not self.interval.contains(t):
            raise StepFunctionError(f"{t} está fuera de {self.interval}")
        return self.values[bisect.bisect_right(self.breakpoints, t)]


def make_step_function(interval: Interval, breakpoints: Sequence[float],
                       values: Sequence[float]) -> StepFunction:
    """
    Construye una función escalonada normalizada.

    Los breakpoints con valores adyacentes iguales se eliminan, fusionando
    los dos trozos, para que S(u) sea minimal. Breakpoints repetidos (aun por
    redondeo) son un error, no una fusión.
    """
    breakpoints = [float(t) for t in breakpoints]
    values = [float(v) for v in values]

    if len(values) != len(breakpoints) + 1:
        raise StepFunctionError(
            f"Se esperaban {len(breakpoints) + 1} valores, se recibieron {len(values)}"
        )
    if not all(math.isfinite(v) for v in values):
        raise StepFunctionError("Los valores deben ser finitos")
    for t in breakpoints:
        if not interval.contains(t):
            raise StepFunctionError(f"Breakpoint {t!r} fuera de ({interval.a}, {interval.b})")
    for left, right in zip(breakpoints, breakpoints[1:]):
        if not left < right:
            raise StepFunctionError(
                f"Breakpoints no estrictamente crecientes: {left!r} >= {right!r}"
            )

    kept_breaks: List[float] = []
    kept_values: List[float] = [values[0]]
    for t, v in zip(breakpoints, values[1:]):
        if v == kept_values[-1]:
            continue
        kept_breaks.append(t)
        kept_values.append(v)

    if len(kept_breaks) < len(breakpoints):
        logger.debug("Normalización eliminó %d breakpoints", len(breakpoints) - len(kept_breaks))

    return StepFunction(interval, tuple(kept_breaks), tuple(kept_values))


def step_function_from_jumps(interval: Interval, breakpoints: Sequence[float],
                             jumps: Sequence[float], z: float = 0.0) -> StepFunction:
    """Arma u con valor inicial z y los saltos dados en los breakpoints dados"""
    if len(jumps) != len(breakpoints):
        raise StepFunctionError("Debe haber un salto por breakpoint")
    if any(j == 0 for j in jumps):
        raise StepFunctionError("Los saltos deben ser no nulos")
    values = [float(z)]
    for jump in jumps:
        values.append(values[-1] + jump)
    return make_step_function(interval, breakpoints, values)


def jump_profile(u: StepFunction) -> JumpProfile:
    """Perfil de saltos de u en el orden de S(u)"""
    return JumpProfile(tuple(right - left for left, right in zip(u.values, u.values[1:])))


def l1_distance(u: StepFunction, v: StepFunction) -> float:
    """
    Distancia ∫_I |u - v| calculada sobre la partición común.

    Se fusionan ambas listas de breakpoints y se suma |Δvalor| · longitud
    en cada trozo de la partición resultante.
    """
    if u.interval != v.interval:
        raise StepFunctionError(f"Intervalos distintos: {u.interval} y {v.interval}")

    edges = sorted(set((u.interval.a, u.interval.b) + u.breakpoints + v.breakpoints))
    terms = []
    for left, right in zip(edges, edges[1:]):
        # Cada trozo de la partición común queda dentro de un trozo de u y de v
        iu = bisect.bisect_right(u.breakpoints, left)
        iv = bisect.bisect_right(v.breakpoints, left)
        terms.append(abs(u.values[iu] - v.values[iv]) * (right - left))
    return math.fsum(terms)


def _check_nonzero(**named_jumps: float):
    for name, value in named_jumps.items():
        if value == 0:
            raise StepFunctionError(f"El salto {name} debe ser no nulo")


def two_jump_sequence(z: float, w_n: float, v_n: float, t0: float, t1: float,
                      interval: Interval) -> StepFunction:
    """
    Elemento de la sucesión de perturbación de dos saltos:
    z en (a, t0], z + w_n en (t0, t1], z + w_n + v_n en (t1, b)
    """
    if not interval.a < t0 < t1 < interval.b:
        raise StepFunctionError(f"Se requiere a < t0 < t1 < b, se recibió t0={t0}, t1={t1}")
    _check_nonzero(w_n=w_n, v_n=v_n)
    return make_step_function(interval, [t0, t1], [z, z + w_n, z + w_n + v_n])


def _check_split(y: float, w1: float, w2: float, t0: float, t1: float, interval: Interval):
    if not interval.a < t0 < t1 < interval.b:
        raise StepFunctionError(f"Se requiere a < t0 < t1 < b, se recibió t0={t0}, t1={t1}")
    _check_nonzero(y=y, w1=w1, w2=w2, w1_mas_w2=w1 + w2)


def split_jump_sequence(z: float, y: float, w1: float, w2: float, t0: float, t1: float,
                        n: int, interval: Interval) -> StepFunction:
    """
    Elemento u_n de la sucesión que parte el salto w1 + w2:
    z, z + y, z + y + w1 en (t1, t1 + 1/n], z + y + w1 + w2 después.
    """
    _check_split(y, w1, w2, t0, t1, interval)
    if n < 1:
        raise StepFunctionError(f"El índice n debe ser positivo, se recibió {n}")
    t_split = t1 + 1.0 / n
    if not t_split < interval.b:
        raise StepFunctionError(
            f"t1 + 1/n = {t_split!r} no es menor que b = {interval.b!r}; aumentar n"
        )
    return make_step_function(
        interval, [t0, t1, t_split], [z, z + y, z + y + w1, z + y + w1 + w2]
    )


def split_jump_limit(z: float, y: float, w1: float, w2: float, t0: float, t1: float,
                     interval: Interval) -> StepFunction:
    """Límite u∞ de split_jump_sequence: saltos [y, w1 + w2]"""
    _check_split(y, w1, w2, t0, t1, interval)
    return make_step_function(interval, [t0, t1], [z, z + y, z + y + w1 + w2])


def split_jump_distance(w2: float, n: int) -> float:
    """Forma cerrada de l1_distance(u_n, u∞) = |w2| / n"""
    return abs(w2) / n
