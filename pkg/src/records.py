"""
Registros de Texto e Historial de Reportes
Formatos legibles para funciones escalonadas y testigos, listas de reales
y un historial JSON de las corridas del CLI
"""

import json
import logging
import os
from collections import Counter
from dataclasses import asdict, dataclass
from datetime import datetime
from typing import Dict, List, Optional, Sequence, Tuple

from expressions import ExpressionError, evaluate_constant
from lab import LscWitness, RecipeKind, SequenceRecipe
from pcfun import Interval, StepFunction, StepFunctionError, make_step_function
from reports import format_real
from supremand import (
    LocalSupremand,
    SupremandError,
    hull,
    load_local_supremand,
    load_supremand,
)

logger = logging.getLogger(__name__)


class RecordFormatError(ValueError):
    """Registro de texto mal formado"""


def parse_real(token: str) -> float:
    """Número decimal, 'inf'/'-inf' o constante como 'pi/2' o '3*pi/8'"""
    token = token.strip()
    try:
        return float(token)
    except ValueError:
        pass
    try:
        return evaluate_constant(token)
    except ExpressionError as error:
        raise RecordFormatError(f"Valor no numérico: '{token}'") from error


def parse_real_list(text: str) -> Tuple[float, ...]:
    """Lista separada por comas; admite constantes en cada elemento"""
    tokens = [t for t in text.split(",") if t.strip()]
    if not tokens:
        raise RecordFormatError("Lista vacía")
    return tuple(parse_real(t) for t in tokens)


def format_real_list(values: Sequence[float]) -> str:
    return ",".join(format_real(v) for v in values)


def _meaningful_lines(text: str) -> List[List[str]]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line.split())
    return lines


# ---------------------------------------------------------------------------
# Función escalonada
# ---------------------------------------------------------------------------

def dumps_step_function(u: StepFunction) -> str:
    """
    interval a b
    piece v0
    ...
    piece vN
    break t1
    ...
    break tN
    """
    lines = [f"interval {format_real(u.interval.a)} {format_real(u.interval.b)}"]
    lines.extend(f"piece {format_real(v)}" for v in u.values)
    lines.extend(f"break {format_real(t)}" for t in u.breakpoints)
    return "\n".join(lines) + "\n"


def loads_step_function(text: str) -> StepFunction:
    """Las líneas piece y break conservan su orden relativo; pueden intercalarse"""
    lines = _meaningful_lines(text)
    if not lines or lines[0][0] != "interval" or len(lines[0]) != 3:
        raise RecordFormatError("La primera línea debe ser 'interval a b'")
    breakpoints: List[float] = []
    values: List[float] = []
    for fields in lines[1:]:
        if len(fields) != 2 or fields[0] not in ("piece", "break"):
            raise RecordFormatError(f"Línea no reconocida: '{' '.join(fields)}'")
        (values if fields[0] == "piece" else breakpoints).append(parse_real(fields[1]))
    try:
        interval = Interval(parse_real(lines[0][1]), parse_real(lines[0][2]))
        return make_step_function(interval, breakpoints, values)
    except StepFunctionError as error:
        raise RecordFormatError(str(error)) from error


# ---------------------------------------------------------------------------
# Testigo
# ---------------------------------------------------------------------------

def dumps_witness(witness: LscWitness) -> str:
    """Registro clave/valor de la receta y las energías del testigo"""
    recipe = witness.recipe
    spec = getattr(witness.supremand, "spec", "") if witness.supremand is not None else ""
    entries = [
        ("recipe", recipe.kind.value),
        ("interval", f"{format_real(recipe.interval.a)} {format_real(recipe.interval.b)}"),
        ("z", format_real(recipe.z)),
        ("jumps", format_real_list(recipe.jumps)),
        ("breaks", format_real_list(recipe.breakpoints)),
    ]
    if recipe.kind == RecipeKind.TWO_JUMP:
        entries.append(("drift", format_real_list(recipe.drift)))
    else:
        entries.extend([
            ("split", str(recipe.split_index)),
            ("w1", format_real(recipe.w1)),
            ("w2", format_real(recipe.w2)),
        ])
    entries.extend([
        ("limit_energy", format_real(witness.limit_energy)),
        ("sequence_energy_liminf", format_real(witness.sequence_energy_liminf)),
        ("gap", format_real(witness.gap)),
        ("supremand", spec),
        ("hulled", "true" if witness.hulled else "false"),
    ])
    if isinstance(witness.supremand, LocalSupremand):
        entries.append(("local", "true"))
    if witness.limit_pair is not None:
        entries.append(("limit_pair", f"{witness.limit_pair[0]},{witness.limit_pair[1]}"))
    return "".join(f"{key} {value}\n" for key, value in entries)


def _witness_fields(text: str) -> Dict[str, str]:
    fields = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition(" ")
        if key in fields:
            raise RecordFormatError(f"Clave repetida: '{key}'")
        fields[key] = value.strip()
    return fields


def loads_witness(text: str) -> LscWitness:
    """
    Inverso de dumps_witness. El supremando se reconstruye desde su
    especificación de catálogo si el registro la trae.
    """
    fields = _witness_fields(text)
    missing = [key for key in ("recipe", "interval", "z", "jumps", "breaks", "limit_energy",
                               "sequence_energy_liminf", "gap") if key not in fields]
    if missing:
        raise RecordFormatError(f"Faltan claves en el testigo: {', '.join(missing)}")

    try:
        kind = RecipeKind(fields["recipe"])
    except ValueError as error:
        raise RecordFormatError(f"Receta desconocida: '{fields['recipe']}'") from error

    bounds = fields["interval"].split()
    if len(bounds) != 2:
        raise RecordFormatError("'interval' requiere dos extremos")

    try:
        interval = Interval(parse_real(bounds[0]), parse_real(bounds[1]))
        if kind == RecipeKind.TWO_JUMP:
            drift = parse_real_list(fields.get("drift", "0,0"))
            recipe = SequenceRecipe(kind, interval, parse_real(fields["z"]),
                                    parse_real_list(fields["jumps"]),
                                    parse_real_list(fields["breaks"]), drift=drift)
        else:
            recipe = SequenceRecipe(kind, interval, parse_real(fields["z"]),
                                    parse_real_list(fields["jumps"]),
                                    parse_real_list(fields["breaks"]),
                                    split_index=int(fields["split"]),
                                    w1=parse_real(fields["w1"]), w2=parse_real(fields["w2"]))
        limit = recipe.limit()
    except (KeyError, ValueError) as error:
        raise RecordFormatError(f"Testigo inválido: {error}") from error

    hulled = fields.get("hulled", "false") == "true"
    supremand = None
    if fields.get("supremand"):
        try:
            if fields.get("local") == "true":
                supremand = load_local_supremand(fields["supremand"])
            else:
                supremand = load_supremand(fields["supremand"])
        except SupremandError as error:
            raise RecordFormatError(str(error)) from error
        if hulled:
            supremand = hull(supremand)

    limit_pair = None
    if "limit_pair" in fields:
        try:
            s, t = (int(i) for i in fields["limit_pair"].split(","))
        except ValueError as error:
            raise RecordFormatError(
                f"'limit_pair' requiere dos índices enteros: '{fields['limit_pair']}'"
            ) from error
        limit_pair = (s, t)

    return LscWitness(
        limit=limit,
        recipe=recipe,
        limit_energy=parse_real(fields["limit_energy"]),
        sequence_energy_liminf=parse_real(fields["sequence_energy_liminf"]),
        gap=parse_real(fields["gap"]),
        supremand=supremand,
        hulled=hulled,
        limit_pair=limit_pair,
    )


# ---------------------------------------------------------------------------
# Historial de reportes
# ---------------------------------------------------------------------------

@dataclass
class ReportRecord:
    """Registro de una corrida del CLI"""
    report_id: str
    timestamp: str
    command: str
    supremand: str
    verdict: str
    items: List[List[str]]

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict):
        return cls(**data)


class ReportHistory:
    """Guarda y consulta los reportes de corridas anteriores"""

    def __init__(self, history_dir: str = "data/history"):
        """
        Args:
            history_dir: Directorio donde se guarda reports.json
        """
        self.history_dir = history_dir
        self.history_file = os.path.join(history_dir, "reports.json")
        os.makedirs(history_dir, exist_ok=True)
        self.records: List[ReportRecord] = []
        self._load_history()

    def save_report(self, command: str, items: Sequence[Tuple[str, str]],
                    supremand: str = "") -> str:
        """
        Agrega un reporte al historial

        Args:
            command: Subcomando que lo produjo
            items: Pares clave/valor del reporte
            supremand: Especificación del supremando, si aplica

        Returns:
            ID del reporte guardado
        """
        values = dict(items)
        record = ReportRecord(
            report_id=self._generate_report_id(),
            timestamp=datetime.now().isoformat(),
            command=command,
            supremand=supremand,
            verdict=values.get("verdict", ""),
            items=[[key, value] for key, value in items],
        )
        self.records.append(record)
        self._save_history()
        logger.debug("Reporte %s guardado en %s", record.report_id, self.history_file)
        return record.report_id

    def get_report(self, report_id: str) -> Optional[ReportRecord]:
        for record in self.records:
            if record.report_id == report_id:
                return record
        return None

    def get_all(self, limit: Optional[int] = None,
                command: Optional[str] = None) -> List[ReportRecord]:
        """Reportes más recientes primero, opcionalmente filtrados por subcomando"""
        records = [r for r in self.records if command is None or r.command == command]
        records.sort(key=lambda r: r.timestamp, reverse=True)
        if limit:
            records = records[:limit]
        return records

    def get_statistics(self) -> dict:
        total = len(self.records)
        if total == 0:
            return {
                "total_runs": 0,
                "failures": 0,
                "most_common_command": "N/A",
                "runs_by_command": {},
            }
        commands = Counter(r.command for r in self.records)
        command, count = commands.most_common(1)[0]
        return {
            "total_runs": total,
            "failures": sum(1 for r in self.records if r.verdict == "fail"),
            "most_common_command": f"{command} ({count} veces)",
            "runs_by_command": dict(commands),
        }

    def clear_history(self):
        self.records = []
        self._save_history()

    def _generate_report_id(self) -> str:
        timestamp = datetime.now().strftime("%Y%m%d%H%M%S%f")
        return f"RUN_{timestamp}_{len(self.records)}"

    def _save_history(self):
        data = [record.to_dict() for record in self.records]
        with open(self.history_file, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2, ensure_ascii=False)

    def _load_history(self):
        if not os.path.exists(self.history_file):
            self.records = []
            return
        try:
            with open(self.history_file, "r", encoding="utf-8") as f:
                self.records = [ReportRecord.from_dict(record) for record in json.load(f)]
        except (OSError, json.JSONDecodeError, TypeError) as error:
            logger.warning("No se pudo leer el historial %s: %s", self.history_file, error)
            self.records = []
