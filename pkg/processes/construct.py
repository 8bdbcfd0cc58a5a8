# Este proceso construye los grafos de las familias conocidas y los emite en graph6 (o DOT)

import sys
from fractions import Fraction

from utils.constructions import dirac, odd_cycle, toft, toft_parts, turan, turan_parts, wheel
from utils.errors import UsageError
from utils.extremal import exact_value
from utils.graph import to_dot, to_graph6
from utils.logger import logger

FAMILIES = {
    "toft": (1, "m"),
    "dirac": (1, "m"),
    "turan": (2, "n r"),
    "cycle": (1, "m"),
    "wheel": (1, "m"),
}


def build(family: str, params):
    """
    Construye el grafo pedido y su metadata

    Args:
        family (str): toft, dirac, turan, cycle o wheel
        params (list): Parámetros enteros de la familia

    Returns:
        tuple: (Graph, dict con metadata)
    """
    arity, names = FAMILIES[family]
    if len(params) != arity:
        raise UsageError(f"construct {family} espera {arity} parámetro(s): {names}",
                         {"family": family, "params": list(params)})
    metadata = {"family": family, "params": list(params)}
    if family == "toft":
        g = toft(params[0])
        metadata["parts"] = toft_parts(params[0])
        metadata["expected_edges"] = exact_value(Fraction(g.n * g.n, 16) + g.n)
    elif family == "dirac":
        g = dirac(params[0])
        metadata["expected_edges"] = exact_value(Fraction(g.n * g.n, 4) + g.n)
    elif family == "turan":
        g = turan(*params)
        metadata["parts"] = turan_parts(*params)
    elif family == "cycle":
        g = odd_cycle(params[0])
    else:
        g = wheel(params[0])
    return g, metadata


def main(args):
    """
    Proceso construct

    Returns:
        dict: Resultado JSON, o None si se emitió DOT
    """
    g, metadata = build(args.family, args.params)
    logger.info(f"Construido {args.family}{tuple(args.params)}: n={g.n}, e={g.edge_count}")
    if args.dot:
        sys.stdout.write(to_dot(g, name=args.family))
        return None
    metadata.update({"n": g.n, "edges": g.edge_count, "graph6": to_graph6(g)})
    return metadata
