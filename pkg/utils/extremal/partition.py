"""
Cantidades de estabilidad para particiones de vértices

evaluate_partition mide aristas internas, aristas faltantes respecto del
grafo r-partito completo sobre las mismas partes y la desviación de tamaños.
stability_partition es un heurístico greedy + búsqueda local sin garantía.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence

from utils.constructions import turan_edges
from utils.errors import InvariantError, ParameterError
from utils.extremal.bounds import exact_value
from utils.graph import Graph, count_cliques, mask_of
from utils.logger import logger


@dataclass(frozen=True)
class PartitionEval:
    """Evaluación exacta de una partición V_1..V_r"""

    parts: List[List[int]]
    internal_edge_sum: int
    missing_edges: int
    deviation: Fraction
    slack: Optional[int]
    clique_free: bool

    @property
    def hypotheses_hold(self) -> bool:
        """G sin K_{r+1} y 0 <= t < e(T_r(n))"""
        return self.clique_free and self.slack is not None and self.slack >= 0

    def to_dict(self) -> dict:
        measured = {}
        if self.hypotheses_hold:
            measured = {
                "internal_within_t": self.internal_edge_sum <= self.slack,
                "missing_within_2t": self.missing_edges <= 2 * self.slack,
            }
        return {
            "parts": self.parts,
            "internal_edge_sum": self.internal_edge_sum,
            "missing_edges": self.missing_edges,
            "deviation": exact_value(self.deviation),
            "slack": self.slack,
            "clique_free": self.clique_free,
            "hypotheses_hold": self.hypotheses_hold,
            "measured": measured,
        }


def _validate(g: Graph, parts: Sequence[Sequence[int]]) -> None:
    seen = []
    for part in parts:
        seen.extend(part)
    if sorted(seen) != list(range(g.n)):
        raise ParameterError("Las partes no forman una partición de V(G)",
                             {"parts": [list(p) for p in parts]})


def evaluate_partition(g: Graph, parts: Sequence[Sequence[int]]) -> PartitionEval:
    """
    Evalúa una partición de V(G)

    Args:
        g (Graph): Grafo
        parts (list): Partes V_1..V_r (pueden ser vacías)

    Returns:
        PartitionEval: Aristas internas, faltantes, desviación y holgura t = e(T_r(n)) - e(G)

    Raises:
        ParameterError: Si las partes no forman una partición
    """
    parts = [sorted(part) for part in parts]
    _validate(g, parts)
    r = len(parts)
    internal = sum(g.edges_within(part) for part in parts)
    cross_pairs = comb(g.n, 2) - sum(comb(len(part), 2) for part in parts)
    missing = cross_pairs - (g.edge_count - internal)
    deviation = sum((Fraction(len(part)) - Fraction(g.n, r)) ** 2 for part in parts)

    slack = None
    if 1 <= r <= g.n:
        slack = turan_edges(g.n, r) - g.edge_count
    clique_free = r + 1 > g.n or count_cliques(g, r + 1) == 0
    return PartitionEval(parts, internal, missing, deviation, slack, clique_free)


def stability_partition(g: Graph, r: int) -> List[List[int]]:
    """
    Partición heurística en r partes con pocas aristas internas

    Asigna cada vértice, en orden de etiqueta, a la parte donde tiene menos
    vecinos (empate: menor índice); luego mueve vértices uno a uno mientras
    algún movimiento reduzca las aristas internas, reiniciando el recorrido
    tras cada movimiento.

    Args:
        g (Graph): Grafo
        r (int): Número de partes (>= 2)

    Returns:
        list: r partes (alguna puede quedar vacía)
    """
    if r < 2:
        raise ParameterError(f"r debe ser >= 2, se recibió {r}", {"r": r})
    owner = [-1] * g.n
    masks = [0] * r
    for v in range(g.n):
        best = min(range(r), key=lambda q: ((g.adj[v] & masks[q]).bit_count(), q))
        owner[v] = best
        masks[best] |= 1 << v

    moves = 0
    improved = True
    while improved:
        improved = False
        for v in range(g.n):
            inside = [(g.adj[v] & masks[q]).bit_count() for q in range(r)]
            best = min(range(r), key=lambda q: (inside[q], q))
            if inside[best] < inside[owner[v]]:
                masks[owner[v]] &= ~(1 << v)
                masks[best] |= 1 << v
                owner[v] = best
                moves += 1
                improved = True
                break

    parts = [[v for v in range(g.n) if owner[v] == q] for q in range(r)]
    if mask_of(v for part in parts for v in part) != (1 << g.n) - 1:
        raise InvariantError("La partición no cubre todos los vértices", {"parts": parts})
    logger.debug(f"stability_partition r={r}: {moves} movimientos locales")
    return parts
