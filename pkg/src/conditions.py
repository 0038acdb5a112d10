"""
Verificador de Condiciones Estructurales
Submaximalidad clásica, separada y Cartesiana, y semicontinuidad inferior
numérica sobre grillas finitas, con testigos en caso de falla
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from reports import CheckReport, Verdict, ViolationWitness, exceeds, slack
from supremand import AnySupremand, GridSupremand, LocalSupremand, SupremandError

logger = logging.getLogger(__name__)


class ConditionError(ValueError):
    """Grilla vacía, suma fuera de dominio o red de muestreo vacía"""


class SumPolicy(Enum):
    """Qué hacer cuando una suma cae fuera del dominio evaluable"""
    REQUIRE_IN_DOMAIN = "require-in-domain"
    SKIP_UNDEFINED = "skip-undefined"


@dataclass(frozen=True)
class TripleGrid:
    """Dominio finito de cuantificación para las desigualdades"""
    points: Tuple[float, ...]
    sum_policy: SumPolicy = SumPolicy.SKIP_UNDEFINED

    def __post_init__(self):
        points = tuple(float(p) for p in self.points)
        if any(p == 0 for p in points):
            raise ConditionError("Los puntos de la grilla deben ser no nulos")
        if len(set(points)) != len(points):
            raise ConditionError("Los puntos de la grilla deben ser distintos")
        object.__setattr__(self, "points", points)


@dataclass(frozen=True)
class _NetProfile:
    """Resumen de una red alrededor de p: mínimo y si hay muestras bajo, sobre o a nivel de h(p)"""
    minimum: float
    argmin: Tuple[float, float]
    below: bool
    above: bool
    level: bool


class _Undefined(Exception):
    """Alguna evaluación de la tupla cae fuera del dominio"""


class ConditionChecker:
    """Motor de verificación de las condiciones sobre supremandos"""

    # Tolerancias por defecto
    DEFAULT_TOL_ANALYTIC = 1e-12
    DEFAULT_TOL_GRID = 0.0

    # Red de muestreo para lsc numérica
    DEFAULT_DELTA = 1e-3
    DEFAULT_NET = 32
    # Radios δ, δ/2, ..., δ/2^(LSC_REFINEMENTS-1)
    LSC_REFINEMENTS = 6

    def default_tol(self, h) -> float:
        return self.DEFAULT_TOL_GRID if isinstance(h, GridSupremand) else self.DEFAULT_TOL_ANALYTIC

    # -- enumeración genérica ----------------------------------------------

    def _evaluate(self, h: Callable, *args: float) -> float:
        if isinstance(h, GridSupremand) and not all(h.contains(a) for a in args):
            raise _Undefined()
        try:
            return h(*args)
        except SupremandError as error:
            raise _Undefined() from error

    def _enumerate(self, kind: str, tuples: Sequence[Tuple[float, ...]],
                   sides: Callable[[Tuple[float, ...]], Tuple[float, float]],
                   has_zero_sum: Callable[[Tuple[float, ...]], bool],
                   policy: SumPolicy, tol: float) -> Iterator[Tuple[str, object]]:
        """
        Recorre las tuplas en orden y emite ('checked', testigo o None) o
        ('skipped', None). Bajo require-in-domain una tupla no evaluable es
        un error.
        """
        for args in tuples:
            if has_zero_sum(args):
                yield "skipped", None
                continue
            try:
                lhs, rhs = sides(args)
            except _Undefined:
                if policy == SumPolicy.REQUIRE_IN_DOMAIN:
                    raise ConditionError(
                        f"{kind}: la tupla {args} cae fuera del dominio evaluable"
                    ) from None
                yield "skipped", None
                continue
            if exceeds(lhs, rhs, tol):
                yield "checked", ViolationWitness(kind, tuple(args), lhs, rhs, slack(lhs, rhs))
            else:
                yield "checked", None

    def _report(self, kind: str, events: Iterator[Tuple[str, object]], tol: float) -> CheckReport:
        checked = skipped = 0
        witness = None
        for status, found in events:
            if status == "skipped":
                skipped += 1
                continue
            checked += 1
            if witness is None and found is not None:
                # La primera violación en orden de enumeración es la menor
                witness = found
        logger.debug("%s: %d tuplas revisadas, %d omitidas", kind, checked, skipped)
        if witness is not None:
            return CheckReport(kind, Verdict.FAIL, witness, checked, skipped, tol)
        return CheckReport(kind, Verdict.PASS, None, checked, skipped, tol, vacuous=checked == 0)

    # -- submaximalidad Cartesiana -------------------------------------------

    def _cartesian_events(self, h: AnySupremand, grid: TripleGrid, tol: float):
        if not grid.points:
            raise ConditionError("La grilla está vacía")

        def sides(args):
            w1, w2, y = args
            lhs = self._evaluate(h, w1 + w2, y)
            rhs = max(self._evaluate(h, w1, y), self._evaluate(h, w2, y),
                      self._evaluate(h, w1, w2))
            return lhs, rhs

        triples = list(itertools.product(grid.points, repeat=3))
        return self._enumerate("cartesian-submaximality", triples, sides,
                               lambda args: args[0] + args[1] == 0, grid.sum_policy, tol)

    def check_cartesian_submaximality(self, h: AnySupremand, grid: TripleGrid,
                                      tol: Optional[float] = None) -> CheckReport:
        """h(w1 + w2, y) <= max{h(w1, y), h(w2, y), h(w1, w2)} en cada terna (w1, w2, y)"""
        tol = self.default_tol(h) if tol is None else tol
        if tol < 0:
            raise ConditionError("La tolerancia debe ser no negativa")
        return self._report("cartesian-submaximality", self._cartesian_events(h, grid, tol), tol)

    def iter_cartesian_violations(self, h: AnySupremand, grid: TripleGrid,
                                  tol: Optional[float] = None) -> Iterator[ViolationWitness]:
        """Todas las ternas violadas, en orden lexicográfico de la grilla"""
        tol = self.default_tol(h) if tol is None else tol
        for status, found in self._cartesian_events(h, grid, tol):
            if found is not None:
                yield found

    # -- submaximalidad separada ---------------------------------------------

    def check_separate_submaximality(self, h: AnySupremand, grid: TripleGrid,
                                     tol: Optional[float] = None) -> CheckReport:
        """h(y, w1 + w2) <= max{h(y, w1), h(y, w2)} en cada terna (y, w1, w2)"""
        tol = self.default_tol(h) if tol is None else tol
        if tol < 0:
            raise ConditionError("La tolerancia debe ser no negativa")
        if not grid.points:
            raise ConditionError("La grilla está vacía")

        def sides(args):
            y, w1, w2 = args
            lhs = self._evaluate(h, y, w1 + w2)
            rhs = max(self._evaluate(h, y, w1), self._evaluate(h, y, w2))
            return lhs, rhs

        triples = list(itertools.product(grid.points, repeat=3))
        events = self._enumerate("separate-submaximality", triples, sides,
                                 lambda args: args[1] + args[2] == 0, grid.sum_policy, tol)
        return self._report("separate-submaximality", events, tol)

    # -- submaximalidad clásica de una variable ------------------------------

    def check_submaximal_1d(self, g: LocalSupremand, grid: Sequence[float],
                            tol: Optional[float] = None,
                            sum_policy: SumPolicy = SumPolicy.SKIP_UNDEFINED) -> CheckReport:
        """g(x1 + x2) <= max{g(x1), g(x2)} para cada par con x1 ≠ -x2"""
        tol = self.DEFAULT_TOL_ANALYTIC if tol is None else tol
        if tol < 0:
            raise ConditionError("La tolerancia debe ser no negativa")
        points = TripleGrid(tuple(grid), sum_policy).points
        if not points:
            raise ConditionError("La grilla está vacía")

        def sides(args):
            x1, x2 = args
            return (self._evaluate(g, x1 + x2),
                    max(self._evaluate(g, x1), self._evaluate(g, x2)))

        pairs = list(itertools.product(points, repeat=2))
        events = self._enumerate("submaximality-1d", pairs, sides,
                                 lambda args: args[0] + args[1] == 0, sum_policy, tol)
        return self._report("submaximality-1d", events, tol)

    # -- semicontinuidad inferior numérica ----------------------------------

    def _net_profile(self, h: Callable, point: Tuple[float, float], value: float, radius: float,
                     net_density: int, tol: float) -> Optional[_NetProfile]:
        """Mínimo de h y posición relativa a h(p) sobre la red perforada de radio dado"""
        offsets = np.linspace(-radius, radius, net_density)
        best = None
        below = above = level = False
        for dx in offsets:
            for dy in offsets:
                if dx == 0 and dy == 0:
                    continue
                q = (point[0] + float(dx), point[1] + float(dy))
                if q[0] == 0 or q[1] == 0:
                    continue
                try:
                    sample = h(*q)
                except SupremandError:
                    continue
                if exceeds(value, sample, tol):
                    below = True
                elif exceeds(sample, value, tol):
                    above = True
                else:
                    level = True
                if best is None or sample < best[0]:
                    best = (sample, q)
        if best is None:
            return None
        return _NetProfile(best[0], best[1], below, above, level)

    def check_lsc_numeric(self, h: AnySupremand, probe_points: Sequence[Tuple[float, float]],
                          delta: Optional[float] = None, net_density: Optional[int] = None,
                          tol: Optional[float] = None) -> CheckReport:
        """
        Heurística unilateral de semicontinuidad inferior.

        En cada punto p se recorren redes de radios δ, δ/2, ... y cada muestra
        se compara por orden con h(p), sin restar valores, de modo que el
        veredicto no cambia al componer h con una f estrictamente creciente.
        Hay falla cuando en todos los radios la red toma valores por debajo de
        h(p) y además:

        - el mínimo de la red no sube al refinar (escalón con lado plano), o
        - ninguna muestra supera h(p) y en todos los radios alguna lo iguala
          (h(p) solo se alcanza desde el lado cerrado del salto).

        Una meseta continua de un solo lado tiene el mismo patrón de orden
        que un salto y también se reporta. Una falla es evidencia a
        resolución δ; un pase no es una prueba.
        """
        delta = self.DEFAULT_DELTA if delta is None else delta
        net_density = self.DEFAULT_NET if net_density is None else net_density
        tol = self.default_tol(h) if tol is None else tol
        if delta <= 0:
            raise ConditionError("delta debe ser positivo")
        if net_density < 2:
            raise ConditionError("La red requiere al menos 2 puntos por eje")
        parameters = {"delta": delta, "net_density": net_density}

        if isinstance(h, GridSupremand):
            # En un alfabeto finito todo punto es aislado
            return CheckReport("lsc", Verdict.PASS, None, 0, len(probe_points), tol,
                               vacuous=True, note="lsc trivial on finite alphabet",
                               parameters=parameters)

        checked = 0
        witness = None
        for point in probe_points:
            p = (float(point[0]), float(point[1]))
            value = h(*p)
            profiles: List[_NetProfile] = []
            for k in range(self.LSC_REFINEMENTS):
                profile = self._net_profile(h, p, value, delta / 2 ** k, net_density, tol)
                if profile is None:
                    raise ConditionError(f"Red de muestreo vacía alrededor de {p}")
                profiles.append(profile)
            checked += 1
            first, last = profiles[0], profiles[-1]
            stalled = not exceeds(last.minimum, first.minimum, tol)
            closed_side = (not any(pr.above for pr in profiles)
                           and all(pr.level for pr in profiles))
            persistent = all(pr.below for pr in profiles) and (stalled or closed_side)
            if persistent and witness is None:
                witness = ViolationWitness("lsc", p, value, last.minimum,
                                           slack(value, last.minimum), companion=last.argmin)
                logger.debug("lsc: %s bajo h(p) en todos los radios (estancado=%s)",
                             p, stalled)

        if witness is not None:
            return CheckReport("lsc", Verdict.FAIL, witness, checked, 0, tol, parameters=parameters)
        return CheckReport("lsc", Verdict.PASS, None, checked, 0, tol,
                           vacuous=checked == 0, parameters=parameters)


_CHECKER = ConditionChecker()


def check_cartesian_submaximality(h: AnySupremand, grid: TripleGrid,
                                  tol: Optional[float] = None) -> CheckReport:
    return _CHECKER.check_cartesian_submaximality(h, grid, tol)


def iter_cartesian_violations(h: AnySupremand, grid: TripleGrid,
                              tol: Optional[float] = None) -> Iterator[ViolationWitness]:
    return _CHECKER.iter_cartesian_violations(h, grid, tol)


def check_separate_submaximality(h: AnySupremand, grid: TripleGrid,
                                 tol: Optional[float] = None) -> CheckReport:
    return _CHECKER.check_separate_submaximality(h, grid, tol)


def check_submaximal_1d(g: LocalSupremand, grid: Sequence[float], tol: Optional[float] = None,
                        sum_policy: SumPolicy = SumPolicy.SKIP_UNDEFINED) -> CheckReport:
    return _CHECKER.check_submaximal_1d(g, grid, tol, sum_policy)


def check_lsc_numeric(h: AnySupremand, probe_points: Sequence[Tuple[float, float]],
                      delta: Optional[float] = None, net_density: Optional[int] = None,
                      tol: Optional[float] = None) -> CheckReport:
    return _CHECKER.check_lsc_numeric(h, probe_points, delta, net_density, tol)
