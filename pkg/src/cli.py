"""
Interfaz de Línea de Comandos
Punto de entrada único: evaluación, hull, verificación de condiciones,
búsqueda de contraejemplos, contraste con el oráculo y tablas de demostración
"""

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from conditions import (
    ConditionError,
    SumPolicy,
    TripleGrid,
    check_cartesian_submaximality,
    check_lsc_numeric,
    check_separate_submaximality,
    check_submaximal_1d,
)
from expressions import ExpressionError
from functional import evaluate_G, evaluate_H, evaluate_H_hulled
from lab import (
    JumpAlphabet,
    LabError,
    crosscheck_theorem,
    demonstrate_sequence,
    hunt_counterexample,
    hunt_lsc_failure,
    oracle_lsc,
    witness_items,
)
from pcfun import StepFunctionError, jump_profile
from records import (
    RecordFormatError,
    ReportHistory,
    dumps_witness,
    format_real_list,
    loads_step_function,
    loads_witness,
    parse_real,
    parse_real_list,
)
from reports import format_real
from supremand import (
    GridSupremand,
    SupremandError,
    catalog_entries,
    dumps_grid_table,
    hull,
    load_local_supremand,
    load_supremand,
    restrict_to_grid,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2

DOMAIN_ERRORS = (
    StepFunctionError,
    SupremandError,
    ExpressionError,
    ConditionError,
    LabError,
    RecordFormatError,
)

_COLORS = {"pass": "\033[32m", "fail": "\033[31m", "title": "\033[1m", "reset": "\033[0m"}


@dataclass
class RunConfig:
    """Configuración resuelta de una corrida"""
    subcommand: str = ""
    supremand_spec: str = ""
    grid: Tuple[float, ...] = ()
    tolerance: Optional[float] = None
    seed: int = 7
    output_mode: str = "human"
    verbosity: int = 0
    history_dir: Optional[str] = None
    color: bool = True

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        output_mode = "kv" if args.kv else args.output
        return cls(
            subcommand=args.command or "",
            supremand_spec=getattr(args, "supremand", None) or getattr(args, "local", None) or "",
            grid=tuple(getattr(args, "grid", None) or getattr(args, "alphabet", None) or ()),
            tolerance=getattr(args, "tol", None),
            seed=getattr(args, "seed", 7),
            output_mode=output_mode,
            verbosity=args.verbose,
            history_dir=args.history,
            color="NO_COLOR" not in os.environ and sys.stdout.isatty(),
        )


def _real_list(text: str) -> Tuple[float, ...]:
    try:
        return parse_real_list(text)
    except RecordFormatError as error:
        raise argparse.ArgumentTypeError(str(error)) from error


def _int_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"Lista de enteros inválida: '{text}'") from error


def _probe_list(text: str) -> List[Tuple[float, float]]:
    """'x:y,x:y,...'"""
    pairs = []
    for chunk in text.split(","):
        if not chunk.strip():
            continue
        parts = chunk.split(":")
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(f"Punto de prueba inválido: '{chunk}'")
        try:
            pairs.append((parse_real(parts[0]), parse_real(parts[1])))
        except RecordFormatError as error:
            raise argparse.ArgumentTypeError(str(error)) from error
    return pairs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supremal-lab",
        description="Laboratorio de funcionales supremales no locales sobre funciones escalonadas",
        epilog="Las listas aceptan constantes: pi/2 se expande a 1.5707963267948966, "
               "pi a 3.1415926535897931. Ver --const.",
    )
    parser.add_argument("--output", choices=["human", "kv"], default="human",
                        help="Formato de salida (default: human)")
    parser.add_argument("--kv", action="store_true", help="Atajo de --output kv")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v: INFO, -vv: DEBUG (a stderr)")
    parser.add_argument("--history", metavar="DIR", default=None,
                        help="Directorio donde guardar el historial de reportes")
    parser.add_argument("--const", metavar="EXPR", default=None,
                        help="Imprime el literal de 17 dígitos de una constante, p. ej. pi/2")

    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("eval", help="Evalúa H(u), Ĥ(u) o G(u)")
    p.add_argument("--function", required=True, metavar="FILE", help="Función escalonada")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--supremand", metavar="SPEC")
    group.add_argument("--local", metavar="SPEC", help="Densidad de un argumento para G")
    p.add_argument("--hulled", action="store_true", help="Evalúa con el hull de h")

    p = sub.add_parser("hull", help="Hull simétrico-diagonal de una tabla")
    p.add_argument("--supremand", required=True, metavar="SPEC")
    p.add_argument("--grid", type=_real_list, default=None,
                   help="Alfabeto para tabular un supremando analítico")

    for name, text in (("check-submax", "Submaximalidad Cartesiana"),
                       ("check-separate", "Submaximalidad separada")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--supremand", required=True, metavar="SPEC")
        p.add_argument("--grid", required=True, type=_real_list)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--sum-policy", choices=[s.value for s in SumPolicy],
                       default=SumPolicy.SKIP_UNDEFINED.value)

    p = sub.add_parser("check-1d", help="Submaximalidad clásica de g")
    p.add_argument("--local", required=True, metavar="SPEC")
    p.add_argument("--grid", required=True, type=_real_list)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--sum-policy", choices=[s.value for s in SumPolicy],
                   default=SumPolicy.SKIP_UNDEFINED.value)

    p = sub.add_parser("check-lsc", help="Semicontinuidad inferior numérica de h")
    p.add_argument("--supremand", required=True, metavar="SPEC")
    p.add_argument("--probe", required=True, type=_probe_list, help="Puntos x:y separados por comas")
    p.add_argument("--delta", type=float, default=None)
    p.add_argument("--net", type=int, default=None, help="Puntos por eje de la red")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--hunt", action="store_true",
                   help="Ante una falla, arma la sucesión de dos saltos")
    p.add_argument("--witness-out", metavar="FILE", default=None)

    p = sub.add_parser("hunt", help="Busca un contraejemplo de partición de saltos")
    p.add_argument("--supremand", required=True, metavar="SPEC")
    p.add_argument("--alphabet", required=True, type=_real_list)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--no-hull", action="store_true", help="No aplicar el hull antes de buscar")
    p.add_argument("--witness-out", metavar="FILE", default=None)

    p = sub.add_parser("oracle", help="Oráculo de fuerza bruta sobre una tabla")
    p.add_argument("--supremand", required=True, metavar="SPEC")
    p.add_argument("--max-limit-jumps", type=int, default=2)
    p.add_argument("--tol", type=float, default=0.0)

    p = sub.add_parser("crosscheck", help="Contrasta predicado y oráculo en tablas al azar")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--instances", type=int, default=200)
    p.add_argument("--alphabet", type=_real_list, default=(1.0, 2.0, 3.0))
    p.add_argument("--levels", type=int, default=4)
    p.add_argument("--max-limit-jumps", type=int, default=2)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("demo", help="Tabla TSV de una sucesión testigo")
    p.add_argument("--witness", required=True, metavar="FILE")
    p.add_argument("--n", type=_int_list, default=[10, 100, 1000])
    p.add_argument("--supremand", metavar="SPEC", default=None,
                   help="Supremando si el testigo no lo trae")

    sub.add_parser("catalog", help="Lista las entradas del catálogo")
    sub.add_parser("history", help="Estadísticas del historial (requiere --history)")
    return parser


class Printer:
    """Salida human o kv sobre stdout"""

    def __init__(self, config: RunConfig):
        self.config = config

    def _paint(self, text: str, key: str) -> str:
        if not self.config.color:
            return text
        return f"{_COLORS[key]}{text}{_COLORS['reset']}"

    def items(self, title: str, items: Sequence[Tuple[str, str]]):
        if self.config.output_mode == "kv":
            for key, value in items:
                print(f"{key}\t{value}")
            return
        print(self._paint(f"📋 {title}", "title"))
        width = max((len(key) for key, _ in items), default=0)
        for key, value in items:
            if key == "verdict":
                value = self._paint("✅ PASA" if value == "pass" else "❌ FALLA", value)
            print(f"  {key.ljust(width)}  {value}")

    def text(self, text: str):
        sys.stdout.write(text)


def _setup_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="[%(levelname)s] %(name)s - %(message)s", force=True)


def _record(config: RunConfig, items: Sequence[Tuple[str, str]]):
    if config.history_dir:
        ReportHistory(config.history_dir).save_report(config.subcommand, items,
                                                      config.supremand_spec)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _write_witness(path: Optional[str], witness):
    if path and witness is not None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(dumps_witness(witness))
        logger.info("Testigo escrito en %s", path)


# ---------------------------------------------------------------------------
# Subcomandos
# ---------------------------------------------------------------------------

def cmd_eval(args, config: RunConfig, out: Printer) -> int:
    u = loads_step_function(_read(args.function))
    if args.local:
        energy = evaluate_G(u, load_local_supremand(args.local))
        where = "none" if energy.attaining_jump is None else str(energy.attaining_jump)
        items = [("functional", "G"), ("value", format_real(energy.value)),
                 ("attaining_jump", where)]
    else:
        h = load_supremand(args.supremand)
        energy = evaluate_H_hulled(u, h) if args.hulled else evaluate_H(u, h)
        pair = energy.attaining_pair
        items = [("functional", "H_hulled" if args.hulled else "H"),
                 ("value", format_real(energy.value)),
                 ("attaining_pair", "none" if pair is None else f"{pair[0]},{pair[1]}")]
    items.append(("jumps", format_real_list(jump_profile(u).jumps) or "none"))
    out.items("Evaluación", items)
    _record(config, items)
    return EXIT_OK


def cmd_hull(args, config: RunConfig, out: Printer) -> int:
    h = load_supremand(args.supremand)
    if not isinstance(h, GridSupremand):
        if args.grid is None:
            raise SupremandError("Un supremando analítico requiere --grid para tabularse")
        h = restrict_to_grid(h, args.grid)
    hat = hull(h)
    if config.output_mode == "kv":
        items = [("alphabet", format_real_list(hat.alphabet))]
        items.extend((f"row_{i}", format_real_list(row)) for i, row in enumerate(hat.table))
        out.items("Hull", items)
    else:
        out.text(dumps_grid_table(hat))
    return EXIT_OK


def _finish_check(report, config: RunConfig, out: Printer, title: str) -> int:
    items = report.to_items()
    out.items(title, items)
    _record(config, items)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_check_submax(args, config: RunConfig, out: Printer) -> int:
    grid = TripleGrid(args.grid, SumPolicy(args.sum_policy))
    report = check_cartesian_submaximality(load_supremand(args.supremand), grid, args.tol)
    return _finish_check(report, config, out, "Submaximalidad Cartesiana")


def cmd_check_separate(args, config: RunConfig, out: Printer) -> int:
    grid = TripleGrid(args.grid, SumPolicy(args.sum_policy))
    report = check_separate_submaximality(load_supremand(args.supremand), grid, args.tol)
    return _finish_check(report, config, out, "Submaximalidad separada")


def cmd_check_1d(args, config: RunConfig, out: Printer) -> int:
    report = check_submaximal_1d(load_local_supremand(args.local), args.grid, args.tol,
                                 SumPolicy(args.sum_policy))
    return _finish_check(report, config, out, "Submaximalidad de g")


def cmd_check_lsc(args, config: RunConfig, out: Printer) -> int:
    h = load_supremand(args.supremand)
    report = check_lsc_numeric(h, args.probe, args.delta, args.net, args.tol)
    code = _finish_check(report, config, out, "Semicontinuidad inferior (heurística)")
    if args.hunt and not report.passed:
        witness = hunt_lsc_failure(h, args.probe, args.delta, args.net, args.tol)
        if witness is not None:
            out.items("Sucesión de perturbación", witness_items(witness))
            _write_witness(args.witness_out, witness)
    return code


def cmd_hunt(args, config: RunConfig, out: Printer) -> int:
    h = load_supremand(args.supremand)
    witness = hunt_counterexample(h, JumpAlphabet(args.alphabet), args.tol,
                                  apply_hull=not args.no_hull)
    if witness is None:
        items = [("verdict", "pass"), ("witness", "none")]
        out.items("Búsqueda de contraejemplos", items)
        _record(config, items)
        return EXIT_OK
    items = [("verdict", "fail")] + witness_items(witness)
    items.append(("implied_triple", format_real_list(witness.implied_triple())))
    out.items("Búsqueda de contraejemplos", items)
    _record(config, items)
    _write_witness(args.witness_out, witness)
    return EXIT_VIOLATION


def cmd_oracle(args, config: RunConfig, out: Printer) -> int:
    h = load_supremand(args.supremand)
    if not isinstance(h, GridSupremand):
        raise LabError("El oráculo requiere una tabla (user-grid:FILE)")
    report = oracle_lsc(h, args.max_limit_jumps, args.tol)
    return _finish_check(report, config, out, "Oráculo lsc")


def cmd_crosscheck(args, config: RunConfig, out: Printer) -> int:
    report = crosscheck_theorem(args.seed, args.instances, JumpAlphabet(args.alphabet),
                                args.levels, args.max_limit_jumps, args.workers)
    items = report.to_items()
    out.items("Contraste predicado / oráculo", items)
    _record(config, items)
    return EXIT_OK if not report.disagreements else EXIT_VIOLATION


def cmd_demo(args, config: RunConfig, out: Printer) -> int:
    witness = loads_witness(_read(args.witness))
    h = load_supremand(args.supremand) if args.supremand else None
    if h is not None and witness.hulled:
        h = hull(h)
    table = demonstrate_sequence(witness, args.n, h)
    out.text(table.to_csv(sep="\t", index=False, float_format="%.17g"))
    return EXIT_OK


def cmd_catalog(args, config: RunConfig, out: Printer) -> int:
    items = []
    for entry in catalog_entries():
        name = f"{entry.name}:{entry.parameter}" if entry.parameter else entry.name
        items.append((name, entry.description))
    out.items("Catálogo de supremandos", items)
    return EXIT_OK


def cmd_history(args, config: RunConfig, out: Printer) -> int:
    if not config.history_dir:
        raise RecordFormatError("El subcomando history requiere --history DIR")
    stats = ReportHistory(config.history_dir).get_statistics()
    items = [
        ("total_runs", str(stats["total_runs"])),
        ("failures", str(stats["failures"])),
        ("most_common_command", stats["most_common_command"]),
    ]
    items.extend((f"runs_{command}", str(count))
                 for command, count in sorted(stats["runs_by_command"].items()))
    out.items("Historial", items)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "hull": cmd_hull,
    "check-submax": cmd_check_submax,
    "check-separate": cmd_check_separate,
    "check-1d": cmd_check_1d,
    "check-lsc": cmd_check_lsc,
    "hunt": cmd_hunt,
    "oracle": cmd_oracle,
    "crosscheck": cmd_crosscheck,
    "demo": cmd_demo,
    "catalog": cmd_catalog,
    "history": cmd_history,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Ejecuta el CLI y devuelve el código de salida: 0 éxito, 1 violación, 2 error"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return EXIT_OK if exit_request.code in (0, None) else EXIT_ERROR

    config = RunConfig.from_args(args)
    _setup_logging(config.verbosity)
    out = Printer(config)

    if args.const is not None:
        try:
            value = parse_real(args.const)
        except RecordFormatError as error:
            print(f"error: {error}", file=sys.stderr)
            return EXIT_ERROR
        print(format_real(value))
        if args.command is None:
            return EXIT_OK

    if args.command is None:
        parser.print_usage(sys.stderr)
        print("error: falta el subcomando", file=sys.stderr)
        return EXIT_ERROR

    try:
        return COMMANDS[args.command](args, config, out)
    except DOMAIN_ERRORS as error:
        logger.debug("Error de dominio", exc_info=True)
        print(f"error: {error}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
