"""
Script de Utilidades para el Laboratorio de Energías Supremales
Herramientas para tareas comunes de desarrollo y mantenimiento
"""

import sys
import os
import csv
import argparse
import math
from collections import Counter

# Agregar src al path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from conditions import TripleGrid, check_cartesian_submaximality, check_separate_submaximality
from lab import JumpAlphabet, hunt_counterexample
from records import ReportHistory, dumps_step_function, dumps_witness, parse_real_list
from supremand import catalog_entries, dumps_grid_table, load_supremand, restrict_to_grid

POSITIVE_GRID = tuple(k * math.pi / 8 for k in range(1, 17))


def exportar_catalogo_csv(output_file='data/catalog_export.csv'):
    """Exporta las entradas del catálogo a CSV"""
    print("📊 Exportando catálogo a CSV...")

    entries = catalog_entries()
    os.makedirs(os.path.dirname(output_file) or '.', exist_ok=True)
    with open(output_file, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f)
        writer.writerow(['Nombre', 'Parámetro', 'Requerido', 'Local', 'Descripción'])
        for entry in entries:
            writer.writerow([
                entry.name,
                entry.parameter or '',
                'sí' if entry.parameter_required else 'no',
                'sí' if entry.local else 'no',
                entry.description,
            ])

    print(f"✅ Exportadas {len(entries)} entradas a {output_file}")


def tabular_supremando(spec, grid, output_file):
    """Tabula un supremando analítico en un archivo user-grid"""
    h = restrict_to_grid(load_supremand(spec), grid)
    os.makedirs(os.path.dirname(output_file) or '.', exist_ok=True)
    with open(output_file, 'w', encoding='utf-8') as f:
        f.write(f"# {spec} tabulado en {len(grid)} puntos\n")
        f.write(dumps_grid_table(h))
    print(f"✅ Tabla de {spec} guardada en {output_file}")


def generar_testigo_ejemplo(output_dir='data/examples'):
    """Escribe el testigo de sin-ratio-sum y su límite u∞"""
    print("🔎 Buscando el testigo de sin-ratio-sum en {π/2, π}...")

    witness = hunt_counterexample(load_supremand("sin-ratio-sum"),
                                  JumpAlphabet((math.pi / 2, math.pi)))
    os.makedirs(output_dir, exist_ok=True)
    witness_file = os.path.join(output_dir, 'sin_ratio_sum_witness.txt')
    limit_file = os.path.join(output_dir, 'sin_ratio_sum_limit.txt')
    with open(witness_file, 'w', encoding='utf-8') as f:
        f.write(dumps_witness(witness))
    with open(limit_file, 'w', encoding='utf-8') as f:
        f.write(dumps_step_function(witness.limit))

    print(f"  ✓ {witness_file}")
    print(f"  ✓ {limit_file}")


def validar_catalogo():
    """Verifica las condiciones de cada entrada sin parámetro obligatorio en kπ/8"""
    print("\n" + "=" * 70)
    print("🔍 CONDICIONES DEL CATÁLOGO EN {kπ/8 : k = 1..16}")
    print("=" * 70)

    grid = TripleGrid(POSITIVE_GRID)
    verdicts = Counter()
    for entry in catalog_entries():
        if entry.local or entry.parameter_required:
            continue
        h = load_supremand(entry.name)
        separate = check_separate_submaximality(h, grid)
        cartesian = check_cartesian_submaximality(h, grid)
        verdicts[cartesian.verdict.value] += 1
        print(f"  • {entry.name:24} separada: {separate.verdict.value:5}"
              f"  Cartesiana: {cartesian.verdict.value}")
        # Separada ⇒ Cartesiana para h simétrico
        if separate.passed and not cartesian.passed:
            print(f"    ⚠️  {entry.name} pasa separada y falla Cartesiana: revisar simetría")

    print(f"\n  Pasan: {verdicts['pass']}  Fallan: {verdicts['fail']}")
    print("\n" + "=" * 70 + "\n")


def generar_estadisticas_historial(history_dir='data/history'):
    """Resume el historial de corridas del CLI"""
    stats = ReportHistory(history_dir).get_statistics()

    print("\n" + "=" * 70)
    print("📊 ESTADÍSTICAS DEL HISTORIAL")
    print("=" * 70)
    print(f"\n  Corridas: {stats['total_runs']}")
    print(f"  Con falla: {stats['failures']}")
    print(f"  Subcomando más usado: {stats['most_common_command']}")
    for command, count in sorted(stats['runs_by_command'].items()):
        print(f"    • {command}: {count}")
    print("\n" + "=" * 70 + "\n")


def main(argv=None):
    parser = argparse.ArgumentParser(description="Utilidades del laboratorio")
    parser.add_argument("tarea", choices=["catalogo", "tabular", "testigo", "validar",
                                          "historial", "todas"])
    parser.add_argument("--spec", default="sin-ratio-sum", help="Supremando para 'tabular'")
    parser.add_argument("--grid", default="pi/8,pi/4,3*pi/8,pi/2",
                        help="Alfabeto para 'tabular'")
    parser.add_argument("--output", default="data/table.csv", help="Archivo para 'tabular'")
    parser.add_argument("--history", default="data/history")
    args = parser.parse_args(argv)

    if args.tarea in ("catalogo", "todas"):
        exportar_catalogo_csv()
    if args.tarea in ("tabular", "todas"):
        tabular_supremando(args.spec, parse_real_list(args.grid), args.output)
    if args.tarea in ("testigo", "todas"):
        generar_testigo_ejemplo()
    if args.tarea in ("validar", "todas"):
        validar_catalogo()
    if args.tarea in ("historial", "todas"):
        generar_estadisticas_historial(args.history)


if __name__ == '__main__':
    try:
        main()
    except KeyboardInterrupt:
        print("\n\n⚠️  Programa interrumpido por el usuario")
    except ValueError as e:
        print(f"\n❌ Error: {str(e)}")
        sys.exit(2)
