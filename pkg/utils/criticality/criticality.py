from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from utils.coloring import Coloring, chromatic_number, is_k_colorable
from utils.config import config
from utils.errors import BudgetExceededError, IndeterminateError, InvariantError, ParameterError, PreconditionError
from utils.graph import Edge, Graph
from utils.logger import logger
from utils.parallel import ordered_map


@dataclass(frozen=True)
class EdgeEvidence:
    """Certificado de que chi(G - e) <= k-1 (coloring es None si no existe)"""

    edge: Edge
    coloring: Optional[Coloring]

    def to_dict(self) -> dict:
        return {
            "edge": list(self.edge),
            "colorable": self.coloring is not None,
            "coloring": list(self.coloring.colors) if self.coloring is not None else None,
        }


@dataclass
class CriticalityReport:
    """Veredicto de k-criticidad con todos sus certificados"""

    k: int
    chi: int
    chi_coloring: Coloring
    edge_evidence: List[EdgeEvidence] = field(default_factory=list)
    isolated_vertices: List[int] = field(default_factory=list)
    min_degree: int = 0
    truncated: bool = False
    verdict: bool = False

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "chi": self.chi,
            "chi_coloring": list(self.chi_coloring.colors),
            "verdict": self.verdict,
            "min_degree": self.min_degree,
            "isolated_vertices": self.isolated_vertices,
            "truncated": self.truncated,
            "edge_evidence": [ev.to_dict() for ev in self.edge_evidence],
        }


def _edge_task(task: Tuple[Graph, int, int, int, Optional[int]]):
    """Trabajo por arista: colorea G - uv con k-1 colores"""
    g, u, v, k, budget = task
    try:
        coloring = is_k_colorable(g.delete_edge(u, v), k - 1, budget)
    except BudgetExceededError:
        return (u, v), None, True
    return (u, v), coloring, False


def is_k_critical(g: Graph, k: int, budget: Optional[int] = None, jobs: Optional[int] = None,
                  stop_early: bool = False) -> CriticalityReport:
    """
    Decide si g es k-crítico

    El veredicto es verdadero si chi(G) = k, G no tiene vértices aislados y
    para cada arista e la gráfica G - e es (k-1)-coloreable. Cada arista lleva
    su certificado, verificado de forma independiente al solver.

    Args:
        g (Graph): Grafo
        k (int): Número cromático objetivo (>= 2)
        budget (int): Límite de nodos por llamada al solver
        jobs (int): Procesos para las comprobaciones por arista (None: configuración)
        stop_early (bool): Detenerse en la primera arista sin certificado

    Returns:
        CriticalityReport: Reporte con el veredicto y los certificados

    Raises:
        IndeterminateError: Si alguna subllamada agota el presupuesto
    """
    if k < 2:
        raise ParameterError(f"k debe ser >= 2, se recibió {k}")
    # 0 significa sin límite en todas las subllamadas
    budget = (config.solver_budget() if budget is None else budget) or 0
    jobs = config.JOBS if jobs is None else jobs

    try:
        chi, chi_coloring = chromatic_number(g, budget)
    except BudgetExceededError as e:
        raise IndeterminateError(e.budget)

    report = CriticalityReport(
        k=k,
        chi=chi,
        chi_coloring=chi_coloring,
        isolated_vertices=[v for v in range(g.n) if g.degree(v) == 0],
        min_degree=g.min_degree(),
    )
    if chi != k:
        logger.debug(f"chi={chi} != k={k}: no es {k}-crítico")
        return report
    if report.isolated_vertices and stop_early:
        report.truncated = True
        return report

    tasks = [(g, u, v, k, budget) for u, v in g.edges()]
    all_colorable = True
    for edge, coloring, exhausted in ordered_map(_edge_task, tasks, jobs):
        if exhausted:
            raise IndeterminateError(budget, edge, partial=report.to_dict())
        if coloring is not None and not coloring.is_proper(g.delete_edge(*edge)):
            raise InvariantError(f"Certificado impropio para G - {edge}", {"edge": list(edge)})
        report.edge_evidence.append(EdgeEvidence(edge, coloring))
        if coloring is None:
            all_colorable = False
            if stop_early:
                report.truncated = len(report.edge_evidence) < len(tasks)
                break

    report.verdict = all_colorable and not report.isolated_vertices
    if report.verdict:
        # Todo grafo k-crítico tiene grado mínimo >= k-1
        if report.min_degree < k - 1:
            raise InvariantError("Grafo k-crítico con grado mínimo < k-1", {"min_degree": report.min_degree})
    logger.debug(f"is_k_critical(n={g.n}, e={g.edge_count}, k={k}) -> {report.verdict}")
    return report


def critical_core_support(g: Graph, k: int, budget: Optional[int] = None) -> Tuple[Graph, List[int]]:
    """
    Extrae un subgrafo k-crítico y los vértices originales que lo soportan

    Recorre las aristas en orden de etiqueta y borra la primera cuya
    eliminación mantiene chi >= k; reinicia tras cada borrado. Las aristas ya
    comprobadas como esenciales siguen siéndolo en todo subgrafo posterior.

    Returns:
        tuple: (núcleo reetiquetado, vértices originales en orden creciente)

    Raises:
        PreconditionError: Si chi(g) < k
    """
    if k < 2:
        raise ParameterError(f"k debe ser >= 2, se recibió {k}")
    if is_k_colorable(g, k - 1, budget) is not None:
        raise PreconditionError(f"chi(G) < {k}: no existe subgrafo {k}-crítico", {"k": k})

    h = g
    essential = set()
    restart = True
    while restart:
        restart = False
        for edge in h.edges():
            if edge in essential:
                continue
            candidate = h.delete_edge(*edge)
            if is_k_colorable(candidate, k - 1, budget) is None:
                h = candidate
                restart = True
                break
            essential.add(edge)

    support = [v for v in range(h.n) if h.degree(v) > 0]
    logger.debug(f"Núcleo {k}-crítico: {len(support)} vértices, {h.edge_count} aristas")
    return h.induced_subgraph(support), support


def critical_core(g: Graph, k: int, budget: Optional[int] = None) -> Graph:
    """
    Subgrafo k-crítico de un grafo con chi >= k (sin vértices aislados)

    Args:
        g (Graph): Grafo con chi(g) >= k
        k (int): Número cromático objetivo

    Returns:
        Graph: Núcleo k-crítico reetiquetado
    """
    core, _ = critical_core_support(g, k, budget)
    return core


def is_odd_cycle(g: Graph) -> bool:
    """Caracterización de los grafos 3-críticos: ciclos impares"""
    return g.n >= 3 and g.n % 2 == 1 and all(d == 2 for d in g.degrees) and g.is_connected()
