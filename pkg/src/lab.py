"""
Laboratorio de Semicontinuidad Inferior
Busca contraejemplos con las sucesiones de perturbación y de partición de
saltos, y contrasta la caracterización (H lsc ⇔ h lsc y Cartesianamente
submaximal) con un oráculo de fuerza bruta sobre alfabetos finitos
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from conditions import (
    ConditionChecker,
    SumPolicy,
    TripleGrid,
    check_cartesian_submaximality,
    check_lsc_numeric,
    iter_cartesian_violations,
)
from functional import EnergyValue, evaluate_G, evaluate_H
from pcfun import (
    Interval,
    StepFunction,
    l1_distance,
    split_jump_limit,
    split_jump_sequence,
    step_function_from_jumps,
    two_jump_sequence,
)
from reports import Verdict, exceeds, format_real, slack
from supremand import (
    ALPHABET_RTOL,
    AnySupremand,
    GridSupremand,
    LocalSupremand,
    SupremandError,
    hull,
)

logger = logging.getLogger(__name__)


class LabError(ValueError):
    """Corrida vacía o receta de sucesión inválida"""


class RecipeKind(Enum):
    """Construcciones de sucesiones convergentes en L¹"""
    TWO_JUMP = "two_jump"
    SPLIT_JUMP = "split_jump"
    GENERAL_SPLIT = "general_split"


# Disposición por defecto: t0 y t1 potencias de dos cerca del extremo
# izquierdo, para que t1 + 1/n se redondee con error relativo mínimo.
DEFAULT_INTERVAL = Interval(0.0, 1.0)
DEFAULT_T0 = 2.0 ** -12
DEFAULT_T1 = 2.0 ** -11

# Índice de referencia para evaluar H(u_n) cuando el perfil no depende de n
REFERENCE_N = 16

# Índices usados para estimar liminf en la sucesión de perturbación
LIMINF_SCHEDULE = tuple(2 ** k for k in range(11))


@dataclass(frozen=True)
class SequenceRecipe:
    """
    Parámetros de una sucesión u_n → u∞.

    jumps y breakpoints describen el límite. En las recetas de partición el
    salto jumps[split_index] se reemplaza por w1 en su breakpoint y w2 en
    breakpoint + 1/n. En two_jump, drift = (dw, dv) y u_n tiene saltos
    w + dw/n, v + dv/n.
    """
    kind: RecipeKind
    interval: Interval
    z: float
    jumps: Tuple[float, ...]
    breakpoints: Tuple[float, ...]
    split_index: Optional[int] = None
    w1: Optional[float] = None
    w2: Optional[float] = None
    drift: Tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if len(self.jumps) != len(self.breakpoints):
            raise LabError("Debe haber un breakpoint por salto")
        if self.kind == RecipeKind.TWO_JUMP and len(self.jumps) != 2:
            raise LabError("La receta two_jump requiere exactamente dos saltos")
        if self.kind != RecipeKind.TWO_JUMP:
            if self.split_index is None or self.w1 is None or self.w2 is None:
                raise LabError("Una receta de partición requiere split_index, w1 y w2")
            if not 0 <= self.split_index < len(self.jumps):
                raise LabError(f"split_index {self.split_index} fuera de rango")
        if self.kind == RecipeKind.SPLIT_JUMP and (len(self.jumps) != 2 or self.split_index != 1):
            raise LabError("La receta split_jump parte el segundo de dos saltos")

    def limit(self) -> StepFunction:
        if self.kind == RecipeKind.SPLIT_JUMP:
            return split_jump_limit(self.z, self.jumps[0], self.w1, self.w2,
                                    self.breakpoints[0], self.breakpoints[1], self.interval)
        if self.kind == RecipeKind.TWO_JUMP:
            return two_jump_sequence(self.z, self.jumps[0], self.jumps[1],
                                     self.breakpoints[0], self.breakpoints[1], self.interval)
        return step_function_from_jumps(self.interval, self.breakpoints, self.jumps, self.z)

    def element(self, n: int) -> StepFunction:
        if n < 1:
            raise LabError(f"El índice n debe ser positivo, se recibió {n}")
        if self.kind == RecipeKind.SPLIT_JUMP:
            return split_jump_sequence(self.z, self.jumps[0], self.w1, self.w2,
                                       self.breakpoints[0], self.breakpoints[1], n, self.interval)
        if self.kind == RecipeKind.TWO_JUMP:
            dw, dv = self.drift
            return two_jump_sequence(self.z, self.jumps[0] + dw / n, self.jumps[1] + dv / n,
                                     self.breakpoints[0], self.breakpoints[1], self.interval)

        i = self.split_index
        t_split = self.breakpoints[i] + 1.0 / n
        upper = self.breakpoints[i + 1] if i + 1 < len(self.breakpoints) else self.interval.b
        if not t_split < upper:
            raise LabError(f"t + 1/n = {t_split!r} alcanza el siguiente breakpoint; aumentar n")
        breakpoints = self.breakpoints[:i + 1] + (t_split,) + self.breakpoints[i + 1:]
        jumps = self.jumps[:i] + (self.w1, self.w2) + self.jumps[i + 1:]
        return step_function_from_jumps(self.interval, breakpoints, jumps, self.z)

    def closed_form_distance(self, n: int) -> float:
        """‖u_n - u∞‖_L¹ en forma cerrada"""
        if self.kind == RecipeKind.TWO_JUMP:
            dw, dv = self.drift
            t0, t1 = self.breakpoints
            return abs(dw) / n * (t1 - t0) + abs(dw + dv) / n * (self.interval.b - t1)
        return abs(self.w2) / n


@dataclass(frozen=True)
class LscWitness:
    """Sucesión u_n → u∞ en L¹ con liminf H(u_n) < H(u∞)"""
    limit: StepFunction
    recipe: SequenceRecipe
    limit_energy: float
    sequence_energy_liminf: float
    gap: float
    supremand: Optional[Union[AnySupremand, LocalSupremand]] = field(default=None, compare=False)
    hulled: bool = False
    limit_pair: Optional[Tuple[int, int]] = None

    def sequence(self, n: int) -> StepFunction:
        return self.recipe.element(n)

    def implied_triple(self) -> Tuple[float, float, float]:
        """
        Terna (w1, w2, y) de submaximalidad Cartesiana que este testigo
        refuta, leída del par que realiza H(u∞).
        """
        if self.recipe.kind == RecipeKind.TWO_JUMP:
            raise LabError("Un testigo two_jump refuta lsc de h, no una terna")
        if self.limit_pair is None:
            raise LabError("El testigo no registra el par que realiza H(u∞)")
        i = self.recipe.split_index
        s, t = self.limit_pair
        if s == i and t != i:
            y = self.recipe.jumps[t]
        elif t == i and s != i:
            y = self.recipe.jumps[s]
        elif s == i and t == i:
            # h(w, w) <= h(w, w1) para h diagonal
            y = self.recipe.w1
        else:
            raise LabError("El par que realiza H(u∞) no involucra el salto partido")
        return self.recipe.w1, self.recipe.w2, y


@dataclass(frozen=True)
class JumpAlphabet:
    """Conjunto finito de saltos admisibles"""
    values: Tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        if not values:
            raise LabError("El alfabeto está vacío")
        if any(v == 0 for v in values):
            raise LabError("El alfabeto no admite saltos nulos")
        if len(set(values)) != len(values):
            raise LabError("El alfabeto tiene valores repetidos")
        object.__setattr__(self, "values", values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def contains(self, x: float) -> bool:
        """Pertenencia con la misma tolerancia que GridSupremand.index_of"""
        return bool(np.isclose(self.values, x, rtol=ALPHABET_RTOL, atol=0.0).any())

    def split_pairs(self) -> List[Tuple[float, float]]:
        """Pares (w1, w2) del alfabeto cuya suma también está en el alfabeto"""
        return [(a, b) for a in self.values for b in self.values if self.contains(a + b)]

    @property
    def sum_closed(self) -> bool:
        """True si al menos una suma de dos elementos queda en el alfabeto"""
        return bool(self.split_pairs())


@dataclass
class OracleReport:
    """Resultado del oráculo de fuerza bruta"""
    verdict: Verdict
    witness: Optional[LscWitness] = None
    limits_checked: int = 0
    splits_checked: int = 0
    perturbations_skipped: int = 0
    vacuous: bool = False

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    def to_items(self) -> Tuple[Tuple[str, str], ...]:
        items = [
            ("check", "oracle-lsc"),
            ("verdict", self.verdict.value),
            ("limits_checked", str(self.limits_checked)),
            ("splits_checked", str(self.splits_checked)),
            ("perturbations_skipped", str(self.perturbations_skipped)),
            ("vacuous", "true" if self.vacuous else "false"),
        ]
        if self.witness is not None:
            items.extend(witness_items(self.witness))
        return tuple(items)


@dataclass
class CrossCheckReport:
    """Acuerdo entre el predicado y el oráculo sobre instancias de prueba"""
    instances: int
    agreements: int
    disagreements: List[Tuple[str, str, str]] = field(default_factory=list)

    def __post_init__(self):
        if self.agreements + len(self.disagreements) != self.instances:
            raise LabError("agreements + disagreements debe igualar instances")

    def to_items(self) -> Tuple[Tuple[str, str], ...]:
        items = [
            ("instances", str(self.instances)),
            ("agreements", str(self.agreements)),
            ("disagreements", str(len(self.disagreements))),
        ]
        for index, (fingerprint, predicate, oracle) in enumerate(self.disagreements):
            items.append((f"disagreement_{index}", f"{predicate}/{oracle} {fingerprint}"))
        return tuple(items)


def witness_items(witness: LscWitness) -> List[Tuple[str, str]]:
    """Pares clave/valor de un testigo para la salida kv"""
    recipe = witness.recipe
    items = [
        ("recipe", recipe.kind.value),
        ("limit_jumps", ",".join(format_real(j) for j in recipe.jumps)),
        ("limit_energy", format_real(witness.limit_energy)),
        ("sequence_energy_liminf", format_real(witness.sequence_energy_liminf)),
        ("gap", format_real(witness.gap)),
    ]
    if recipe.kind == RecipeKind.TWO_JUMP:
        items.append(("drift", ",".join(format_real(d) for d in recipe.drift)))
    else:
        items.append(("split", f"{recipe.split_index}:{format_real(recipe.w1)},"
                               f"{format_real(recipe.w2)}"))
    return items


def _energy(u: StepFunction, h) -> EnergyValue:
    if isinstance(h, LocalSupremand):
        return evaluate_G(u, h)
    return evaluate_H(u, h)


def _confirm(recipe: SequenceRecipe, h, tol: float, hulled: bool,
             liminf: Optional[float] = None) -> Optional[LscWitness]:
    """Evalúa ambos lados con el funcional completo; None si no hay brecha"""
    limit = recipe.limit()
    limit_energy = _energy(limit, h)
    if liminf is None:
        liminf = _energy(recipe.element(REFERENCE_N), h).value
    if not exceeds(limit_energy.value, liminf, tol):
        return None
    return LscWitness(
        limit=limit,
        recipe=recipe,
        limit_energy=limit_energy.value,
        sequence_energy_liminf=liminf,
        gap=slack(limit_energy.value, liminf),
        supremand=h,
        hulled=hulled,
        limit_pair=limit_energy.attaining_pair,
    )


# ---------------------------------------------------------------------------
# Búsqueda de contraejemplos
# ---------------------------------------------------------------------------

def hunt_counterexample(h: AnySupremand, alphabet: JumpAlphabet, tol: Optional[float] = None,
                        apply_hull: bool = True) -> Optional[LscWitness]:
    """
    Recorre las ternas que violan la submaximalidad Cartesiana y materializa
    la sucesión de partición de cada una: u∞ con saltos [y, w1 + w2] y u_n
    con saltos [y, w1, w2]. Devuelve el primer testigo cuya brecha se
    confirma con H completo.
    """
    target = hull(h) if apply_hull else h
    tol = ConditionChecker().default_tol(target) if tol is None else tol
    grid = TripleGrid(alphabet.values, SumPolicy.SKIP_UNDEFINED)

    report = check_cartesian_submaximality(target, grid, tol)
    if report.tuples_checked == 0:
        raise LabError("El alfabeto no forma ninguna terna admisible")
    if report.passed:
        logger.info("hunt: %s es Cartesianamente submaximal en el alfabeto", target.name)
        return None

    for violation in iter_cartesian_violations(target, grid, tol):
        w1, w2, y = violation.arguments
        recipe = SequenceRecipe(
            RecipeKind.SPLIT_JUMP, DEFAULT_INTERVAL, 0.0,
            jumps=(y, w1 + w2), breakpoints=(DEFAULT_T0, DEFAULT_T1),
            split_index=1, w1=w1, w2=w2,
        )
        try:
            witness = _confirm(recipe, target, tol, apply_hull)
        except SupremandError as error:
            logger.debug("hunt: terna %s no evaluable en u_n: %s", violation.arguments, error)
            continue
        if witness is not None:
            logger.info("hunt: testigo en la terna %s con brecha %s",
                        violation.arguments, format_real(witness.gap))
            return witness
        logger.debug("hunt: la terna %s no produce brecha en H", violation.arguments)
    return None


def hunt_lsc_failure(h: AnySupremand, probe_points: Sequence[Tuple[float, float]],
                     delta: Optional[float] = None, net_density: Optional[int] = None,
                     tol: Optional[float] = None) -> Optional[LscWitness]:
    """
    Dirección 'h es lsc': ante una falla de check_lsc_numeric en p = (w, v) arma la
    sucesión de perturbación de dos saltos hacia el punto de la red que
    realiza el mínimo y estima liminf H(u_n) sobre la cola de LIMINF_SCHEDULE.
    """
    report = check_lsc_numeric(h, probe_points, delta, net_density, tol)
    if report.passed:
        return None
    w, v = report.witness.arguments
    q = report.witness.companion
    recipe = SequenceRecipe(
        RecipeKind.TWO_JUMP, DEFAULT_INTERVAL, 0.0,
        jumps=(w, v), breakpoints=(DEFAULT_T0, DEFAULT_T1),
        drift=(q[0] - w, q[1] - v),
    )
    tail = LIMINF_SCHEDULE[len(LIMINF_SCHEDULE) // 2:]
    liminf = min(evaluate_H(recipe.element(n), h).value for n in tail)
    tol = report.tolerance
    witness = _confirm(recipe, h, tol, hulled=False, liminf=liminf)
    if witness is None:
        logger.info("hunt-lsc: la brecha de h en %s no se refleja en H", (w, v))
    return witness


# ---------------------------------------------------------------------------
# Oráculo de fuerza bruta
# ---------------------------------------------------------------------------

def _limit_breakpoints(k: int) -> Tuple[float, ...]:
    # Separación 1/(k+1) > 1/REFERENCE_N para k <= 3
    return tuple((i + 1) / (k + 1) for i in range(k))


def _run_oracle(h, alphabet: Tuple[float, ...], contains: Callable[[float], bool],
                max_limit_jumps: int, tol: float) -> OracleReport:
    if max_limit_jumps < 1:
        raise LabError("max_limit_jumps debe ser al menos 1")
    if max_limit_jumps > 3:
        raise LabError("max_limit_jumps está limitado a 3")

    limits = splits = perturbations = 0
    for k in range(1, max_limit_jumps + 1):
        breakpoints = _limit_breakpoints(k)
        for jumps in itertools.product(alphabet, repeat=k):
            limits += 1
            # w_n → w dentro de un alfabeto finito es eventualmente constante:
            # la cola coincide con u∞ y liminf H(u_n) = H(u∞), no se evalúan
            perturbations += k * (len(alphabet) - 1)
            for i, w in enumerate(jumps):
                for w1 in alphabet:
                    w2 = w - w1
                    if w2 == 0 or not contains(w2):
                        continue
                    splits += 1
                    recipe = SequenceRecipe(
                        RecipeKind.GENERAL_SPLIT, DEFAULT_INTERVAL, 0.0,
                        jumps=tuple(jumps), breakpoints=breakpoints,
                        split_index=i, w1=w1, w2=w2,
                    )
                    witness = _confirm(recipe, h, tol, hulled=False)
                    if witness is not None:
                        logger.debug("oráculo: falla en %s partiendo %s = %s + %s",
                                     jumps, w, w1, w2)
                        return OracleReport(Verdict.FAIL, witness, limits, splits, perturbations)

    vacuous = splits == 0
    if vacuous and max_limit_jumps < 2:
        raise LabError("Ninguna partición es representable en el alfabeto y max_limit_jumps < 2")
    return OracleReport(Verdict.PASS, None, limits, splits, perturbations, vacuous)


def oracle_lsc(h: GridSupremand, max_limit_jumps: int = 2, tol: float = 0.0) -> OracleReport:
    """
    Enumera límites de hasta max_limit_jumps saltos del alfabeto y todas sus
    particiones de un salto dentro del alfabeto. Pasa por StepFunction y
    evaluate_H, no por la desigualdad de la terna.
    """
    if not isinstance(h, GridSupremand):
        raise LabError("El oráculo requiere un supremando de grilla")
    return _run_oracle(h, h.alphabet, h.contains, max_limit_jumps, tol)


def oracle_lsc_local(g: LocalSupremand, alphabet: JumpAlphabet, max_limit_jumps: int = 2,
                     tol: float = 0.0) -> OracleReport:
    """Versión de una variable: particiones de un salto evaluadas con G"""
    return _run_oracle(g, alphabet.values, alphabet.contains, max_limit_jumps, tol)


# ---------------------------------------------------------------------------
# Contraste predicado / oráculo
# ---------------------------------------------------------------------------

def _compare(h: GridSupremand, max_limit_jumps: int) -> Tuple[bool, Tuple[str, str, str]]:
    predicate = check_cartesian_submaximality(h, TripleGrid(h.alphabet))
    oracle = oracle_lsc(h, max_limit_jumps)
    entry = (h.fingerprint(), predicate.verdict.value, oracle.verdict.value)
    return predicate.verdict == oracle.verdict, entry


def crosscheck_supremands(supremands: Sequence[GridSupremand], max_limit_jumps: int = 2,
                          workers: int = 1) -> CrossCheckReport:
    """Contrasta predicado y oráculo sobre supremandos dados"""
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda h: _compare(h, max_limit_jumps), supremands))
    else:
        outcomes = [_compare(h, max_limit_jumps) for h in supremands]

    disagreements = [entry for agreed, entry in outcomes if not agreed]
    for fingerprint, predicate, oracle in disagreements:
        logger.warning("Desacuerdo predicado=%s oráculo=%s en %s", predicate, oracle, fingerprint)
    return CrossCheckReport(len(outcomes), len(outcomes) - len(disagreements), disagreements)


def random_grid_supremands(random_seed: int, instances: int, alphabet: JumpAlphabet,
                           value_levels: int) -> List[GridSupremand]:
    """
    Supremandos simétricos y diagonales al azar: tabla con valores enteros en
    0..value_levels-1 y luego el hull. La instancia i usa el i-ésimo hijo de
    SeedSequence(random_seed).
    """
    if value_levels < 1:
        raise LabError("value_levels debe ser al menos 1")
    size = len(alphabet)
    supremands = []
    for index, child in enumerate(np.random.SeedSequence(random_seed).spawn(instances)):
        rng = np.random.default_rng(child)
        table = rng.integers(0, value_levels, size=(size, size)).astype(float)
        raw = GridSupremand(alphabet.values, table, name=f"random-{random_seed}-{index}")
        supremands.append(hull(raw))
    return supremands


def crosscheck_theorem(random_seed: int, instances: int, alphabet: JumpAlphabet,
                       value_levels: int, max_limit_jumps: int = 2,
                       workers: int = 1) -> CrossCheckReport:
    """Predicado Cartesiano contra oráculo lsc en instancias aleatorias hulleadas"""
    if not alphabet.sum_closed:
        raise LabError("El alfabeto debe contener al menos una suma de dos de sus elementos")
    supremands = random_grid_supremands(random_seed, instances, alphabet, value_levels)
    report = crosscheck_supremands(supremands, max_limit_jumps, workers)
    logger.info("crosscheck: %d/%d acuerdos (semilla %d)",
                report.agreements, report.instances, random_seed)
    return report


# ---------------------------------------------------------------------------
# Tablas de demostración
# ---------------------------------------------------------------------------

def demonstrate_sequence(witness: LscWitness, n_values: Sequence[int],
                         h: Optional[AnySupremand] = None) -> pd.DataFrame:
    """Distancia L¹ (integrada y en forma cerrada) y energías para cada n"""
    h = witness.supremand if h is None else h
    if h is None:
        raise LabError("El testigo no trae supremando; indicar uno explícitamente")
    limit = witness.limit
    limit_energy = _energy(limit, h).value
    rows = []
    for n in n_values:
        u_n = witness.sequence(n)
        rows.append({
            "n": int(n),
            "l1_distance": l1_distance(u_n, limit),
            "closed_form": witness.recipe.closed_form_distance(n),
            "H_n": _energy(u_n, h).value,
            "H_limit": limit_energy,
        })
    return pd.DataFrame(rows, columns=["n", "l1_distance", "closed_form", "H_n", "H_limit"])
