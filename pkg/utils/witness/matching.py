"""
Extracción del emparejamiento inducido W -> W' en grafos k-críticos

Para cada w en W se borra la arista uw, se calcula una (k-1)-coloración exacta
de G - uw y se lee phi(w) en la clase residual: la única clase que no contiene
ningún x_i ni a w. Toda verificación final usa solo consultas de adyacencia.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from utils.coloring import Coloring, is_k_colorable
from utils.config import config
from utils.criticality import is_k_critical
from utils.errors import BudgetExceededError, HypothesisError, InvariantError, NotCriticalError
from utils.graph import Graph, mask_of
from utils.logger import logger
from utils.parallel import ordered_map


@dataclass(frozen=True)
class WitnessStep:
    """Certificado por w: coloración de G - uw, clase residual y phi(w)"""

    w: int
    coloring: Coloring
    residual_color: int
    residual_class: Tuple[int, ...]
    phi: int

    def to_dict(self) -> dict:
        return {
            "w": self.w,
            "coloring": list(self.coloring.colors),
            "residual_color": self.residual_color,
            "residual_class": list(self.residual_class),
            "phi": self.phi,
        }


@dataclass
class LemmaWitness:
    """Conjuntos W, W' y la biyección phi con sus certificados"""

    k: int
    clique: List[int]
    u: int
    W: List[int]
    W_prime: List[int]
    phi: Dict[int, int]
    per_w: List[WitnessStep] = field(default_factory=list)
    overlap: List[int] = field(default_factory=list)
    checks: Dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "clique": self.clique,
            "u": self.u,
            "W": self.W,
            "W_prime": self.W_prime,
            "phi": {str(w): p for w, p in sorted(self.phi.items())},
            "overlap": self.overlap,
            "checks": self.checks,
            "per_w": [step.to_dict() for step in self.per_w],
        }


def _check_hypotheses(g: Graph, k: int, clique: Sequence[int], u: int, W: Sequence[int]) -> None:
    if k < 4:
        raise HypothesisError("k>=4", f"El lema requiere k >= 4, se recibió {k}")
    for v in list(clique) + [u] + list(W):
        if not 0 <= v < g.n:
            raise HypothesisError("vertex-range", f"Vértice {v} fuera de 0..{g.n - 1}", {"vertex": v})
    if len(clique) != k - 3 or len(set(clique)) != len(clique):
        raise HypothesisError("clique-size", f"Se requieren {k - 3} vértices distintos x_i",
                              {"clique": list(clique)})
    if not g.is_clique(clique):
        raise HypothesisError("clique-complete", "x_1..x_{k-3} no inducen un grafo completo",
                              {"clique": list(clique)})
    if u in clique:
        raise HypothesisError("u-outside-clique", f"u={u} pertenece a la clique", {"u": u})
    if not W:
        raise HypothesisError("W-nonempty", "W es vacío")
    common = g.adj[u]
    for x in clique:
        common &= g.adj[x]
    outside = [w for w in W if not common >> w & 1]
    if outside:
        raise HypothesisError("W-common-neighborhood",
                              "W no está contenido en N(x_1) ∩ ... ∩ N(x_{k-3}) ∩ N(u)",
                              {"outside": outside})


def _color_without_uw(task: Tuple[Graph, int, int, int, int]):
    g, u, w, k, budget = task
    try:
        return w, is_k_colorable(g.delete_edge(u, w), k - 1, budget), False
    except BudgetExceededError:
        return w, None, True


def _step_for(g: Graph, k: int, clique: Sequence[int], u: int, W: Sequence[int],
              w: int, coloring: Optional[Coloring]) -> WitnessStep:
    if coloring is None:
        raise NotCriticalError(f"G - {u}{w} no es ({k - 1})-coloreable", {"edge": [u, w]})
    colors = coloring.colors
    if colors[u] != colors[w]:
        # La coloración de G - uw ya es una (k-1)-coloración propia de G
        raise NotCriticalError(f"u={u} y w={w} quedaron en clases distintas",
                               {"edge": [u, w], "coloring": list(colors)})

    pinned = {colors[x] for x in clique} | {colors[w]}
    residual = sorted(set(range(k - 1)) - pinned)
    if len(residual) != 1:
        raise InvariantError("clique + w debe fijar k-2 colores distintos", {"w": w, "coloring": list(colors)})
    residual_color = residual[0]
    residual_class = tuple(v for v in range(g.n) if colors[v] == residual_color)
    if any(colors[x] != residual_color for x in W if x != w):
        raise InvariantError("W - {w} fuera de la clase residual", {"w": w, "coloring": list(colors)})

    candidates = [v for v in residual_class if g.has_edge(v, w)]
    if not candidates:
        recolored = list(colors)
        recolored[w] = residual_color
        raise NotCriticalError(f"N({w}) no corta la clase residual: G es ({k - 1})-coloreable",
                               {"w": w, "coloring": recolored})
    return WitnessStep(w, coloring, residual_color, residual_class, min(candidates))


def verify_matching_witness(g: Graph, witness: LemmaWitness) -> Dict[str, bool]:
    """
    Reverifica los invariantes del testigo solo con consultas de adyacencia

    Returns:
        dict: Resultado de cada invariante
    """
    W, W_prime, phi = witness.W, witness.W_prime, witness.phi
    mask_w, mask_wp = mask_of(W), mask_of(W_prime)
    checks = {
        "bijection": len(W_prime) == len(W) and sorted(phi) == sorted(W)
        and sorted(set(phi.values())) == sorted(W_prime),
        "phi_sees_only_w": all(g.adj[phi[w]] & mask_w == 1 << w for w in W),
        "w_sees_only_phi": all(g.adj[w] & mask_wp == 1 << phi[w] for w in W),
    }
    if len(W) >= 3:
        checks["W_independent"] = g.is_independent(W)
        checks["disjoint"] = not mask_w & mask_wp
    return checks


def extract_matching_witness(g: Graph, k: int, clique: Sequence[int], u: int, W: Sequence[int],
                             verify_critical: bool = False, budget: Optional[int] = None,
                             jobs: Optional[int] = None) -> LemmaWitness:
    """
    Construye W' y phi: W -> W' con N(phi(w)) ∩ W = {w} y N(w) ∩ W' = {phi(w)}

    Args:
        g (Graph): Grafo k-crítico
        k (int): k >= 4
        clique (list): x_1..x_{k-3}, un K_{k-3}
        u (int): Vértice fuera de la clique
        W (list): Subconjunto no vacío de N(x_1) ∩ ... ∩ N(x_{k-3}) ∩ N(u)
        verify_critical (bool): Reverificar antes la k-criticidad de g (costoso)
        budget (int): Límite de nodos por coloración
        jobs (int): Procesos para las coloraciones por w

    Returns:
        LemmaWitness: Testigo verificado

    Raises:
        HypothesisError: Si falla una hipótesis (se nombra cuál)
        NotCriticalError: Si el cálculo produce evidencia de que g no es k-crítico
    """
    clique = list(clique)
    W = sorted(set(W))
    _check_hypotheses(g, k, clique, u, W)
    budget = (config.solver_budget() if budget is None else budget) or 0
    jobs = config.JOBS if jobs is None else jobs

    if verify_critical and not is_k_critical(g, k, budget, jobs, stop_early=True).verdict:
        raise HypothesisError("k-critical", f"El grafo no es {k}-crítico")

    steps = []
    tasks = [(g, u, w, k, budget) for w in W]
    for w, coloring, exhausted in ordered_map(_color_without_uw, tasks, jobs):
        if exhausted:
            raise BudgetExceededError(budget, {"w": w})
        steps.append(_step_for(g, k, clique, u, W, w, coloring))

    phi = {step.w: step.phi for step in steps}
    W_prime = sorted(set(phi.values()))
    witness = LemmaWitness(k, clique, u, W, W_prime, phi, steps,
                           overlap=sorted(set(W) & set(W_prime)))
    witness.checks = verify_matching_witness(g, witness)

    failed = [name for name, ok in witness.checks.items() if not ok]
    if failed:
        raise NotCriticalError(f"Invariantes del testigo fallidos: {', '.join(failed)}",
                               {"failed": failed, "witness": witness.to_dict()})
    if witness.overlap:
        logger.info(f"W ∩ W' = {witness.overlap} (permitido con |W| <= 2)")
    logger.debug(f"Testigo k={k}: W={W} -> W'={W_prime}")
    return witness
