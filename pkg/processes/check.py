# Este proceso evalúa las desigualdades sobre grafos críticos concretos y las particiones de estabilidad

from utils.criticality import is_k_critical
from utils.errors import HypothesisError, NoFourCycleError, UsageError
from utils.extremal import (
    check_2path_bound,
    check_4cycle,
    check_clique_caps,
    check_heavy_edge,
    evaluate_partition,
    stability_partition,
)
from utils.logger import logger


def _require_critical(g, k: int) -> None:
    if not is_k_critical(g, k, stop_early=True).verdict:
        raise HypothesisError("k-critical", f"El grafo no es {k}-crítico", {"k": k})


def _two_path(args, g):
    if args.verify_critical:
        _require_critical(g, 4)
    two_path = check_2path_bound(g)
    try:
        four_cycle = check_4cycle(g)
    except NoFourCycleError as e:
        logger.info(f"Sin 4-ciclos: {e.message}")
        four_cycle = None
    logger.info(f"Máximo sobre 2-caminos: {two_path.max_value} (cota {two_path.cap})")
    return {
        "two_path": two_path.to_dict(),
        "heavy_edge": check_heavy_edge(g),
        "four_cycle": four_cycle,
        "verdict": two_path.verdict,
    }


def _cliques(args, g):
    if args.k is None:
        raise UsageError("check cliques requiere -k")
    if args.verify_critical:
        _require_critical(g, args.k)
    report = check_clique_caps(g, args.k)
    logger.info(f"Copias de K_{args.k - 1}: {report.count} (cotas {report.n_cap} y {report.sharp_cap})")
    return report.to_dict()


def _partition(args, g):
    if args.parts:
        try:
            parts = [[int(v) for v in chunk.split(",") if v.strip() != ""] for chunk in args.parts.split("|")]
        except ValueError:
            raise UsageError(f"--parts no válido: {args.parts!r} (ej. \"0,1,2|3,4\")", {"parts": args.parts})
        source = "given"
    else:
        if args.r is None:
            raise UsageError("check partition requiere -r o --parts")
        parts = stability_partition(g, args.r)
        source = "stability_partition"
    evaluation = evaluate_partition(g, parts)
    logger.info(f"Partición ({source}): {evaluation.internal_edge_sum} aristas internas, "
                f"{evaluation.missing_edges} faltantes")
    result = evaluation.to_dict()
    result["source"] = source
    return result


def main(args, g):
    """
    Proceso check

    Args:
        args: Argumentos (kind = 2path | cliques | partition)
        g (Graph): Grafo de entrada

    Returns:
        dict: Reporte de la comprobación
    """
    if args.kind == "2path":
        return _two_path(args, g)
    if args.kind == "cliques":
        return _cliques(args, g)
    return _partition(args, g)
