# Este proceso extrae los testigos del lema de recoloración: el emparejamiento W -> W' y los conjuntos X'', Y''

from utils.errors import HypothesisError, UsageError
from utils.logger import logger
from utils.witness import extract_matching_witness, extract_xy_witness


def _matching(args, g):
    if args.u is None or not args.W:
        raise UsageError("witness matching requiere -u y --W")
    witness = extract_matching_witness(g, args.k, args.clique or [], args.u, args.W,
                                       verify_critical=args.verify_critical)
    logger.success(f"Testigo verificado: W={witness.W} -> W'={witness.W_prime}")
    return witness.to_dict()


def _xy(args, g):
    if not args.cycle or len(args.cycle) != 4:
        raise UsageError("witness xy requiere --cycle con cuatro vértices")
    for v in args.cycle:
        if not 0 <= v < g.n:
            raise HypothesisError("vertex-range", f"Vértice {v} fuera de 0..{g.n - 1}", {"vertex": v})
    V = []
    for i, given in enumerate((args.V1, args.V2, args.V3, args.V4)):
        # Por defecto V_i = N(v_i)
        V.append(given if given is not None else g.neighbors(args.cycle[i]))
    witness = extract_xy_witness(g, args.cycle, V, verify_critical=args.verify_critical)
    logger.success(f"Testigo XY verificado: |X''|={len(witness.X_dprime)}, |Y''|={len(witness.Y_dprime)}")
    return witness.to_dict()


def main(args, g):
    """
    Proceso witness

    Args:
        args: Argumentos (kind = matching | xy y sus parámetros)
        g (Graph): Grafo k-crítico de entrada

    Returns:
        dict: Testigo con certificados y comprobaciones
    """
    logger.info(f"Extrayendo testigo '{args.kind}' sobre n={g.n}, e={g.edge_count}")
    if args.kind == "matching":
        return _matching(args, g)
    return _xy(args, g)
