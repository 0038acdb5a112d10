"""
Resultados de Verificación
Valores reales extendidos, testigos de violación y reportes de los verificadores
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

# Centinelas de ℝ̄ sobre float IEEE: el orden total y max/min nativos
# dan exactamente la semántica extendida.
BOTTOM = float("-inf")
TOP = float("inf")


def exceeds(lhs: float, rhs: float, tol: float) -> bool:
    """
    lhs > rhs + tol con el orden extendido.

    TOP a la derecha nunca falla, BOTTOM a la izquierda nunca falla,
    TOP a la izquierda falla contra cualquier lado derecho menor.
    """
    if rhs == TOP or lhs == BOTTOM:
        return False
    if lhs == TOP or rhs == BOTTOM:
        return True
    return lhs > rhs + tol


def slack(lhs: float, rhs: float) -> float:
    """lhs - rhs si ambos son finitos; ±inf en otro caso"""
    if math.isfinite(lhs) and math.isfinite(rhs):
        return lhs - rhs
    if lhs == rhs:
        return 0.0
    return TOP if lhs > rhs else BOTTOM


def format_real(value: float) -> str:
    """17 dígitos significativos; 'inf' y '-inf' para los centinelas"""
    if value == TOP:
        return "inf"
    if value == BOTTOM:
        return "-inf"
    return format(float(value), ".17g")


class Verdict(Enum):
    """Veredicto de un verificador"""
    PASS = "pass"
    FAIL = "fail"


@dataclass(frozen=True)
class ViolationWitness:
    """Tupla concreta que viola una desigualdad, con ambos lados evaluados"""
    kind: str
    arguments: Tuple[float, ...]
    lhs: float
    rhs: float
    slack: float
    # Punto adicional que realiza el lado derecho (p. ej. el mínimo de la red en lsc)
    companion: Optional[Tuple[float, ...]] = None


@dataclass
class CheckReport:
    """Veredicto, testigo, tolerancia y estadísticas de enumeración"""
    check: str
    verdict: Verdict
    witness: Optional[ViolationWitness] = None
    tuples_checked: int = 0
    tuples_skipped: int = 0
    tolerance: float = 0.0
    vacuous: bool = False
    note: str = ""
    parameters: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict == Verdict.FAIL and self.witness is None:
            raise ValueError("Un reporte con falla requiere testigo")
        if self.verdict == Verdict.PASS and self.witness is not None:
            raise ValueError("Un reporte sin falla no lleva testigo")

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    def to_items(self) -> Tuple[Tuple[str, str], ...]:
        """Pares clave/valor estables para la salida kv y el historial"""
        items = [
            ("check", self.check),
            ("verdict", self.verdict.value),
            ("tuples_checked", str(self.tuples_checked)),
            ("tuples_skipped", str(self.tuples_skipped)),
            ("tolerance", format_real(self.tolerance)),
            ("vacuous", "true" if self.vacuous else "false"),
        ]
        for key in sorted(self.parameters):
            items.append((key, format_real(self.parameters[key])))
        if self.note:
            items.append(("note", self.note))
        if self.witness is not None:
            items.extend([
                ("witness_kind", self.witness.kind),
                ("witness_arguments", ",".join(format_real(a) for a in self.witness.arguments)),
                ("witness_lhs", format_real(self.witness.lhs)),
                ("witness_rhs", format_real(self.witness.rhs)),
                ("witness_slack", format_real(self.witness.slack)),
            ])
            if self.witness.companion is not None:
                items.append(("witness_companion",
                              ",".join(format_real(a) for a in self.witness.companion)))
        return tuple(items)
