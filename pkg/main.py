#!/usr/bin/env python3
"""
critlab: grafos k-críticos, coloración exacta y cotas de f_k(n)
Punto de entrada principal del proyecto
"""

import argparse
import os
import sys

from dotenv import load_dotenv

# Cargar variables de entorno
load_dotenv()

# Agregar el directorio raíz al path para importaciones
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from utils.config import config
from utils.errors import BudgetExceededError, CritlabError, UsageError
from utils.logger import logger
from utils.reports import build_document, emit_json, read_input_graph

GRAPH_COMMANDS = {"color", "verify-critical", "witness", "check"}


class _Parser(argparse.ArgumentParser):
    """ArgumentParser que reporta los errores de uso como UsageError"""

    def error(self, message):
        raise UsageError(message)


def _int_list(text: str):
    try:
        return [int(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"lista de enteros inválida: '{text}'")


def build_parser() -> argparse.ArgumentParser:
    """
    Construye el parser con un subparser por comando

    Returns:
        argparse.ArgumentParser: Parser completo
    """
    common = _Parser(add_help=False)
    common.add_argument('--budget', type=int, default=None,
                        help='Límite de nodos por llamada al solver (0 = sin límite; ver CRITLAB_BUDGET)')
    common.add_argument('--jobs', type=int, default=None, help='Procesos de trabajo')
    common.add_argument('--seed', type=int, default=None, help='Semilla (se repite en la salida)')
    common.add_argument('--output-dir', default=None, help='Directorio para testigos y tablas')
    common.add_argument('--verbose', '-v', action='store_true', help='Logs de depuración en consola')

    graph_input = _Parser(add_help=False)
    graph_input.add_argument('--graph', '-g', default=None, help='Grafo en graph6')
    graph_input.add_argument('--file', '-f', default=None, help='Archivo con un grafo graph6 (por defecto stdin)')

    table = _Parser(add_help=False)
    table.add_argument('--format', choices=['json', 'csv', 'xlsx'], default='json', help='Formato de la tabla')

    parser = _Parser(
        prog="critlab",
        description="Grafos k-críticos: construcciones, criticidad, testigos, cotas y enumeración",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Ejemplos de uso:
  python main.py construct toft 5
  python main.py construct wheel 5 | python main.py verify-critical -k 4
  python main.py bounds -k 4 --n 100 1000 --format csv
  python main.py ftable -k 4 --nmax 7
        """
    )
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)
    sub.required = True

    p = sub.add_parser('construct', parents=[common], help='Construir una familia de grafos')
    p.add_argument('family', choices=['toft', 'dirac', 'turan', 'cycle', 'wheel'])
    p.add_argument('params', type=int, nargs='+')
    p.add_argument('--dot', action='store_true', help='Emitir DOT en lugar de JSON')

    p = sub.add_parser('color', parents=[common, graph_input], help='Número cromático exacto')
    p.add_argument('-k', type=int, default=None, help='Decidir solo la k-colorabilidad')

    p = sub.add_parser('verify-critical', parents=[common, graph_input], help='Verificar k-criticidad')
    p.add_argument('-k', type=int, required=True)
    p.add_argument('--core', action='store_true', help='Extraer además un núcleo k-crítico')

    p = sub.add_parser('witness', parents=[common, graph_input], help='Testigos del lema de recoloración')
    p.add_argument('kind', choices=['matching', 'xy'])
    p.add_argument('-k', type=int, default=4)
    p.add_argument('--clique', type=_int_list, default=None, help='x_1..x_{k-3}')
    p.add_argument('-u', type=int, default=None)
    p.add_argument('--W', type=_int_list, default=None)
    p.add_argument('--cycle', type=_int_list, default=None, help='4-ciclo v1 v2 v3 v4')
    for name in ('V1', 'V2', 'V3', 'V4'):
        p.add_argument(f'--{name}', type=_int_list, default=None)
    p.add_argument('--verify-critical', action='store_true')

    p = sub.add_parser('check', parents=[common, graph_input], help='Desigualdades y particiones')
    p.add_argument('kind', choices=['2path', 'cliques', 'partition'])
    p.add_argument('-k', type=int, default=None)
    p.add_argument('-r', type=int, default=None)
    p.add_argument('--parts', default=None, help="Partición explícita, p. ej. '0,1,2|3,4'")
    p.add_argument('--verify-critical', action='store_true')

    p = sub.add_parser('bounds', parents=[common, table], help='Tabla exacta de cotas')
    p.add_argument('-k', type=int, required=True)
    p.add_argument('--n', type=int, nargs='+', required=True)

    p = sub.add_parser('enumerate', parents=[common], help='Enumerar grafos k-críticos')
    p.add_argument('-n', type=int, required=True)
    p.add_argument('-k', type=int, required=True)
    p.add_argument('--maximum-only', action='store_true')
    p.add_argument('--checkpoint', default=None, help='Archivo JSON de reanudación')
    p.add_argument('--write-witnesses', action='store_true')

    p = sub.add_parser('ftable', parents=[common, table], help='Tabla de f_k(n) por enumeración')
    p.add_argument('-k', type=int, required=True)
    p.add_argument('--nmax', type=int, required=True)

    return parser


def dispatch(args):
    """Ejecuta el proceso del subcomando y devuelve su resultado"""
    if args.command in GRAPH_COMMANDS:
        g = read_input_graph(args.graph, args.file)
        if args.command == 'color':
            from processes.color import main as color_main
            return color_main(args, g)
        if args.command == 'verify-critical':
            from processes.verify_critical import main as verify_main
            return verify_main(args, g)
        if args.command == 'witness':
            from processes.witness import main as witness_main
            return witness_main(args, g)
        from processes.check import main as check_main
        return check_main(args, g)

    if args.command == 'construct':
        from processes.construct import main as construct_main
        return construct_main(args)
    if args.command == 'bounds':
        from processes.bounds import main as bounds_main
        return bounds_main(args)
    if args.command == 'enumerate':
        from processes.enumerate_critical import main as enumerate_main
        return enumerate_main(args)
    from processes.ftable import main as ftable_main
    return ftable_main(args)


def run(argv=None) -> int:
    """
    Ejecuta la línea de comandos

    Args:
        argv (list): Argumentos (sys.argv[1:] por defecto)

    Returns:
        int: 0 éxito, 1 error de dominio, 2 error de uso, 3 presupuesto agotado
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        logger.error(f"Error de uso: {e.message}")
        return e.exit_code

    logger.set_level('DEBUG' if args.verbose else os.getenv('CRITLAB_LOG_LEVEL', 'INFO'))
    try:
        config.reload()
        config.override(budget=args.budget, jobs=args.jobs, seed=args.seed, output_dir=args.output_dir)
        logger.debug(f"Comando '{args.command}' (budget={config.BUDGET}, jobs={config.JOBS}, seed={config.SEED})")
        result = dispatch(args)
    except BudgetExceededError as e:
        logger.failure(e.message)
        emit_json(build_document(args.command, error=e.to_dict(), partial=e.partial))
        return e.exit_code
    except CritlabError as e:
        logger.failure(e.message)
        emit_json(build_document(args.command, error=e.to_dict()))
        return e.exit_code

    if result is not None:
        emit_json(build_document(args.command, result))
    return 0


def main():
    """
    Función principal que maneja los argumentos de línea de comandos
    y ejecuta el proceso correspondiente
    """
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
