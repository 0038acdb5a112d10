"""
Funcionales Supremales
H(u) = max h([u](s), [u](t)) sobre S(u)×S(u), su versión con hull Ĥ
y el funcional local G(u) = max g([u](t))
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from pcfun import StepFunction, jump_profile
from supremand import AnySupremand, GridSupremand, LocalSupremand, hull

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnergyValue:
    """Valor del funcional y el par de saltos que lo realiza"""
    value: float
    attaining_pair: Optional[Tuple[int, int]] = None
    attaining_jump: Optional[int] = None


def evaluate_H(u: StepFunction, h: AnySupremand) -> EnergyValue:
    """
    Máximo de h([u](s), [u](t)) sobre todos los pares ordenados de saltos,
    incluida la diagonal s = t. Con S(u) vacío devuelve el ínfimo declarado
    de h. Empates: el par (s, t) lexicográficamente menor.
    """
    jumps = jump_profile(u).jumps
    if not jumps:
        return EnergyValue(h.declared_infimum)

    if isinstance(h, GridSupremand):
        indices = [h.index_of(j) for j in jumps]
        block = h.table[np.ix_(indices, indices)]
        # argmax recorre en orden de filas: el primer máximo es el menor (s, t)
        s, t = np.unravel_index(int(np.argmax(block)), block.shape)
        return EnergyValue(float(block[s, t]), (int(s), int(t)))

    best_value, best_pair = None, None
    for s, left in enumerate(jumps):
        for t, right in enumerate(jumps):
            value = h(left, right)
            if best_value is None or value > best_value:
                best_value, best_pair = value, (s, t)
    return EnergyValue(best_value, best_pair)


def evaluate_H_hulled(u: StepFunction, h: AnySupremand) -> EnergyValue:
    """Ĥ(u): H evaluado con el hull simétrico-diagonal de h"""
    return evaluate_H(u, hull(h))


def evaluate_G(u: StepFunction, g: LocalSupremand) -> EnergyValue:
    """Máximo de g sobre los saltos de u; S(u) vacío da inf g"""
    jumps = jump_profile(u).jumps
    if not jumps:
        return EnergyValue(g.declared_infimum)
    values = [g(j) for j in jumps]
    best = max(range(len(values)), key=lambda i: (values[i], -i))
    return EnergyValue(values[best], attaining_jump=best)
