# Este proceso verifica la k-criticidad de un grafo con un certificado por arista

from utils.criticality import critical_core_support, is_k_critical
from utils.graph import to_graph6
from utils.logger import logger


def main(args, g):
    """
    Proceso verify-critical

    Args:
        args: Argumentos (k, core)
        g (Graph): Grafo de entrada

    Returns:
        dict: Reporte de criticidad (y núcleo crítico con --core)
    """
    logger.info(f"Verificando {args.k}-criticidad: n={g.n}, e={g.edge_count}")
    report = is_k_critical(g, args.k)
    result = report.to_dict()
    result.update({"n": g.n, "edges": g.edge_count, "graph6": to_graph6(g)})

    if args.core:
        if report.chi >= args.k:
            core, support = critical_core_support(g, args.k)
            result["core"] = {"graph6": to_graph6(core), "n": core.n,
                              "edges": core.edge_count, "support": support}
        else:
            result["core"] = None

    if report.verdict:
        logger.success(f"El grafo es {args.k}-crítico")
    else:
        logger.info(f"El grafo no es {args.k}-crítico (chi={report.chi})")
    return result
