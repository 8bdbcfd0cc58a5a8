# Este proceso calcula el número cromático exacto (o decide la k-colorabilidad) de un grafo

from utils.coloring import DsaturSolver, chromatic_number, greedy_clique, greedy_dsatur, verify_coloring
from utils.errors import InvariantError
from utils.logger import logger


def main(args, g):
    """
    Proceso color

    Args:
        args: Argumentos (k opcional)
        g (Graph): Grafo de entrada

    Returns:
        dict: chi con su coloración, o la decisión para k
    """
    result = {
        "n": g.n,
        "edges": g.edge_count,
        "greedy_colors": greedy_dsatur(g).c,
        "clique_lower_bound": len(greedy_clique(g)),
    }
    if args.k is not None:
        solver = DsaturSolver()
        coloring = solver.decide(g, args.k)
        result.update({
            "k": args.k,
            "colorable": coloring is not None,
            "coloring": list(coloring.colors) if coloring is not None else None,
            "nodes": solver.stats.nodes,
        })
        logger.info(f"¿{args.k}-coloreable? {coloring is not None} ({solver.stats.nodes} nodos)")
        return result

    chi, coloring = chromatic_number(g)
    if not verify_coloring(g, coloring, chi):
        raise InvariantError("La coloración del solver no es propia", {"coloring": list(coloring.colors)})
    result.update({"chi": chi, "coloring": list(coloring.colors)})
    logger.info(f"chi(G) = {chi}")
    return result
