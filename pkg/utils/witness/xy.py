"""
Conjuntos X'' e Y'' alrededor de un 4-ciclo de un grafo 4-crítico

Se aplica el testigo de emparejamiento con k = 4 dos veces: W = X = V1 ∩ V3
con clique {v1} y u = v3, y W = Y = V2 ∩ V4 con clique {v2} y u = v4.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from utils.config import config
from utils.criticality import is_k_critical
from utils.errors import HypothesisError, NotCriticalError
from utils.graph import Graph, triangle_profile
from utils.logger import logger
from utils.witness.matching import LemmaWitness, extract_matching_witness


@dataclass
class XYWitness:
    """X, Y, X'', Y'' con el 4-ciclo y los conjuntos V1..V4 de partida"""

    cycle: List[int]
    V: List[List[int]]
    X: List[int]
    Y: List[int]
    X_dprime: List[int]
    Y_dprime: List[int]
    x_witness: LemmaWitness
    y_witness: LemmaWitness
    triangles: List[int] = field(default_factory=list)
    checks: Dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "cycle": self.cycle,
            "V": self.V,
            "X": self.X,
            "Y": self.Y,
            "X_prime": self.x_witness.W_prime,
            "Y_prime": self.y_witness.W_prime,
            "X_dprime": self.X_dprime,
            "Y_dprime": self.Y_dprime,
            "cycle_triangles": self.triangles,
            "checks": self.checks,
            "x_witness": self.x_witness.to_dict(),
            "y_witness": self.y_witness.to_dict(),
        }


def _check_cycle(g: Graph, cycle: Sequence[int], V: Sequence[Sequence[int]]) -> None:
    for v in cycle:
        if not 0 <= v < g.n:
            raise HypothesisError("vertex-range", f"Vértice {v} fuera de 0..{g.n - 1}", {"vertex": v})
    if len(cycle) != 4 or len(set(cycle)) != 4:
        raise HypothesisError("4-cycle", "Se requieren 4 vértices distintos", {"cycle": list(cycle)})
    for i in range(4):
        if not g.has_edge(cycle[i], cycle[(i + 1) % 4]):
            raise HypothesisError("4-cycle", f"{cycle[i]}{cycle[(i + 1) % 4]} no es arista",
                                  {"cycle": list(cycle)})
    if len(V) != 4:
        raise HypothesisError("V-sets", "Se requieren cuatro conjuntos V1..V4")
    for i in range(4):
        v, prev, nxt = cycle[i], cycle[(i - 1) % 4], cycle[(i + 1) % 4]
        name = f"V{i + 1}"
        if prev not in V[i] or nxt not in V[i]:
            raise HypothesisError(name, f"{name} debe contener a {prev} y {nxt}", {name: list(V[i])})
        outside = [x for x in V[i] if not g.has_edge(v, x)]
        if outside:
            raise HypothesisError(name, f"{name} no está contenido en N({v})", {"outside": outside})


def extract_xy_witness(g: Graph, cycle: Sequence[int], V: Sequence[Sequence[int]],
                       verify_critical: bool = False, budget: Optional[int] = None,
                       jobs: Optional[int] = None) -> XYWitness:
    """
    Calcula X'' = X' - (V1 ∪ ... ∪ V4) e Y'' = Y' - (V1 ∪ ... ∪ V4)

    Args:
        g (Graph): Grafo 4-crítico
        cycle (list): 4-ciclo v1 v2 v3 v4
        V (list): Conjuntos V1..V4 con {v_{i-1}, v_{i+1}} ⊆ V_i ⊆ N(v_i)
        verify_critical (bool): Reverificar la 4-criticidad de g
        budget (int): Límite de nodos por coloración
        jobs (int): Procesos para las coloraciones

    Returns:
        XYWitness: Testigo con los tres grupos de invariantes verificados

    Raises:
        HypothesisError: Si falla una hipótesis
        NotCriticalError: Si los invariantes no se cumplen (evidencia de no criticidad)
    """
    cycle = list(cycle)
    V = [sorted(set(part)) for part in V]
    _check_cycle(g, cycle, V)
    budget = (config.solver_budget() if budget is None else budget) or 0
    jobs = config.JOBS if jobs is None else jobs
    if verify_critical and not is_k_critical(g, 4, budget, jobs, stop_early=True).verdict:
        raise HypothesisError("k-critical", "El grafo no es 4-crítico")

    v1, v2, v3, v4 = cycle
    X = sorted(set(V[0]) & set(V[2]))
    Y = sorted(set(V[1]) & set(V[3]))
    x_witness = extract_matching_witness(g, 4, [v1], v3, X, budget=budget, jobs=jobs)
    y_witness = extract_matching_witness(g, 4, [v2], v4, Y, budget=budget, jobs=jobs)

    union = set().union(*V)
    X_dprime = sorted(set(x_witness.W_prime) - union)
    Y_dprime = sorted(set(y_witness.W_prime) - union)

    t = triangle_profile(g).per_vertex
    witness = XYWitness(cycle, V, X, Y, X_dprime, Y_dprime, x_witness, y_witness,
                        triangles=[t[v] for v in cycle])
    witness.checks = {
        "disjoint_from_V": not (set(X_dprime) | set(Y_dprime)) & union,
        "x_edge_cap": g.bipartite_edges(X_dprime, X) <= len(X),
        "y_edge_cap": g.bipartite_edges(Y_dprime, Y) <= len(Y),
        "x_size_bound": len(X_dprime) >= len(X) - 2 * t[v1] - 2 * t[v3] - 2,
        "y_size_bound": len(Y_dprime) >= len(Y) - 2 * t[v2] - 2 * t[v4] - 2,
    }
    failed = [name for name, ok in witness.checks.items() if not ok]
    if failed:
        raise NotCriticalError(f"Invariantes X''/Y'' fallidos: {', '.join(failed)}",
                               {"failed": failed, "witness": witness.to_dict()})
    logger.debug(f"Testigo XY sobre {cycle}: |X|={len(X)}, |X''|={len(X_dprime)}, "
                 f"|Y|={len(Y)}, |Y''|={len(Y_dprime)}")
    return witness
