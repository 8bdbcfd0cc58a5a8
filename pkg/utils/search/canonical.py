"""
Forma canónica exacta por cadena graph6 mínima

Se minimiza la cadena graph6 sobre todas las permutaciones que respetan la
partición equitativa obtenida por refinamiento de colores (empezando por el
grado). Las columnas del triángulo superior se fijan posición a posición y solo
sobreviven los prefijos mínimos; de dos vértices gemelos sin colocar se prueba
uno solo, porque su transposición es un automorfismo.
"""

from typing import List, Tuple

from utils.errors import ScaleLimitError
from utils.graph import Graph, to_graph6

MAX_CANONICAL_N = 10


def refine_colors(g: Graph) -> List[int]:
    """
    Refinamiento de colores 1-dimensional con colores ordenados de forma invariante

    Args:
        g (Graph): Grafo

    Returns:
        list: Color de cada vértice; grafos isomorfos reciben la misma multiset
    """
    colors = list(g.degrees)
    cells = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
            for v in range(g.n)
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        refined_cells = len(ranking)
        colors = refined
        if refined_cells == cells:
            return colors
        cells = refined_cells


def _twins(g: Graph, u: int, v: int) -> bool:
    return g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u)


def canonical_order(g: Graph) -> List[int]:
    """
    Orden de vértices que produce la cadena graph6 mínima

    Returns:
        list: order[p] es el vértice original colocado en la posición p
    """
    if g.n > MAX_CANONICAL_N:
        raise ScaleLimitError(f"canonical_form admite n <= {MAX_CANONICAL_N}, se recibió n={g.n}",
                              {"n": g.n, "limit": MAX_CANONICAL_N})
    colors = refine_colors(g)
    cell_at = sorted(colors)
    frontier: List[Tuple[Tuple[int, ...], int]] = [((), 0)]

    for p in range(g.n):
        best_column = None
        extended = []
        for order, placed in frontier:
            kept: List[int] = []
            for v in range(g.n):
                if placed >> v & 1 or colors[v] != cell_at[p]:
                    continue
                if any(_twins(g, v, w) for w in kept):
                    continue
                kept.append(v)
                column = 0
                for w in order:
                    column = (column << 1) | (g.adj[v] >> w & 1)
                if best_column is None or column < best_column:
                    best_column = column
                    extended = []
                if column == best_column:
                    extended.append((order + (v,), placed | 1 << v))
        frontier = extended
    return list(frontier[0][0])


def canonical_form(g: Graph) -> str:
    """
    Cadena graph6 canónica: igual para dos grafos si y solo si son isomorfos

    No es el mínimo sobre las n! permutaciones, sino sobre los órdenes que
    respetan las celdas del refinamiento de colores. Como las celdas y su orden
    son invariantes por isomorfismo, el resultado sigue siendo canónico, pero
    puede diferir de la cadena graph6 mínima absoluta.

    Args:
        g (Graph): Grafo con n <= 10

    Returns:
        str: Cadena graph6 mínima sobre los órdenes compatibles con las celdas

    Raises:
        ScaleLimitError: Si n > 10
    """
    order = canonical_order(g)
    perm = [0] * g.n
    for position, v in enumerate(order):
        perm[v] = position
    return to_graph6(g.relabel(perm))
