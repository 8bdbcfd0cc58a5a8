"""
Decisión exacta de k-colorabilidad por ramificación y acotamiento tipo DSATUR

Orden de ramificación: mayor saturación, luego mayor grado, luego menor etiqueta.
Los colores de una clique greedy maximal se fijan de antemano para romper la
simetría de colores, y solo se abre un color nuevo por nodo.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from utils.coloring.coloring import Coloring
from utils.config import config
from utils.errors import BudgetExceededError, InvariantError, ParameterError
from utils.graph import Graph, iter_bits
from utils.logger import logger


@dataclass
class SolverStats:
    """Contadores de la última llamada"""

    nodes: int = 0
    clique_size: int = 0
    greedy_colors: int = 0


def _resolve_budget(budget: Optional[int]) -> Optional[int]:
    # None: usar configuración; 0: sin límite
    if budget is None:
        return config.solver_budget()
    return budget or None


def greedy_dsatur(g: Graph) -> Coloring:
    """
    Coloración greedy DSATUR (cota superior de chi)

    Returns:
        Coloring: Coloración propia, no necesariamente óptima
    """
    colors = [-1] * g.n
    forbidden = [0] * g.n
    deg = g.degrees
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if colors[u] < 0),
            key=lambda u: (forbidden[u].bit_count(), deg[u], -u),
        )
        mask = forbidden[v]
        c = (~mask & (mask + 1)).bit_length() - 1
        colors[v] = c
        for u in iter_bits(g.adj[v]):
            forbidden[u] |= 1 << c
    return Coloring.of(colors)


def greedy_clique(g: Graph) -> List[int]:
    """
    Clique maximal greedy: desde cada vértice agrega el candidato de mayor grado

    Returns:
        list: La clique más grande encontrada, en orden de construcción
    """
    deg = g.degrees
    best: List[int] = []
    for start in sorted(range(g.n), key=lambda v: (-deg[v], v)):
        if deg[start] + 1 <= len(best):
            break
        clique = [start]
        candidates = g.adj[start]
        while candidates:
            v = max(iter_bits(candidates), key=lambda u: ((g.adj[u] & candidates).bit_count(), deg[u], -u))
            clique.append(v)
            candidates &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return best


class DsaturSolver:
    """
    Solver exacto de k-colorabilidad

    Una instancia no guarda estado entre llamadas salvo `stats`; es seguro crear
    una por proceso de trabajo.
    """

    def __init__(self, budget: Optional[int] = None):
        """
        Args:
            budget (int): Límite de nodos; None usa CRITLAB_BUDGET, 0 desactiva el límite
        """
        self.budget = _resolve_budget(budget)
        self.stats = SolverStats()

    def decide(self, g: Graph, k: int) -> Optional[Coloring]:
        """
        Decide si g admite una coloración propia con a lo sumo k colores

        Args:
            g (Graph): Grafo
            k (int): Número de colores (>= 1)

        Returns:
            Coloring: Certificado si existe, None si g no es k-colorable

        Raises:
            BudgetExceededError: Si la búsqueda supera el presupuesto de nodos
        """
        if k < 1:
            raise ParameterError(f"k debe ser >= 1, se recibió {k}")
        self.stats = SolverStats()
        if g.n == 0:
            return Coloring.of([])

        greedy = greedy_dsatur(g)
        self.stats.greedy_colors = greedy.c
        if greedy.c <= k:
            return greedy

        clique = greedy_clique(g)
        self.stats.clique_size = len(clique)
        if len(clique) > k:
            return None

        colors = self._search(g, k, clique)
        logger.debug(f"DSATUR n={g.n} k={k}: {self.stats.nodes} nodos, "
                     f"clique={len(clique)}, greedy={greedy.c}")
        if colors is None:
            return None
        coloring = Coloring.of(colors)
        if not coloring.is_proper(g):
            raise InvariantError("El solver produjo una coloración impropia")
        return coloring

    def _search(self, g: Graph, k: int, clique: List[int]) -> Optional[List[int]]:
        n = g.n
        deg = g.degrees
        adj = g.adj
        colors = [-1] * n
        # counts[v][c]: vecinos de v con color c; sat[v]: colores distintos entre ellos
        counts = [[0] * k for _ in range(n)]
        sat = [0] * n
        free = (1 << n) - 1

        def assign(v: int, c: int) -> None:
            colors[v] = c
            for u in iter_bits(adj[v]):
                if counts[u][c] == 0:
                    sat[u] += 1
                counts[u][c] += 1

        def unassign(v: int, c: int) -> None:
            colors[v] = -1
            for u in iter_bits(adj[v]):
                counts[u][c] -= 1
                if counts[u][c] == 0:
                    sat[u] -= 1

        for c, v in enumerate(clique):
            assign(v, c)
            free &= ~(1 << v)

        budget = self.budget
        stats = self.stats

        def search(free: int, used: int) -> bool:
            stats.nodes += 1
            if budget is not None and stats.nodes > budget:
                raise BudgetExceededError(budget)
            if not free:
                return True
            chosen, key = -1, None
            for v in iter_bits(free):
                s = sat[v]
                if s >= k:
                    return False
                candidate = (s, deg[v])
                if key is None or candidate > key:
                    chosen, key = v, candidate
            row = counts[chosen]
            rest = free & ~(1 << chosen)
            for c in range(min(used + 1, k)):
                if row[c]:
                    continue
                assign(chosen, c)
                if search(rest, max(used, c + 1)):
                    return True
                unassign(chosen, c)
            return False

        if search(free, len(clique)):
            return colors
        return None


def is_k_colorable(g: Graph, k: int, budget: Optional[int] = None) -> Optional[Coloring]:
    """
    Decisión exacta: coloración propia con <= k colores o None

    Args:
        g (Graph): Grafo
        k (int): Número de colores (>= 1)
        budget (int): Límite de nodos; None usa la configuración, 0 sin límite

    Returns:
        Coloring: Certificado, o None si no existe
    """
    return DsaturSolver(budget).decide(g, k)


def chromatic_number(g: Graph, budget: Optional[int] = None) -> Tuple[int, Coloring]:
    """
    Número cromático exacto y una coloración óptima

    La exactitud queda atestiguada porque is_k_colorable(g, chi-1) es None
    (o chi-1 es menor que una clique encontrada).

    Args:
        g (Graph): Grafo
        budget (int): Límite de nodos por llamada al solver

    Returns:
        tuple: (chi, Coloring con chi colores)
    """
    if g.n == 0:
        return 0, Coloring.of([])
    upper = greedy_dsatur(g)
    lower = len(greedy_clique(g))
    solver = DsaturSolver(budget)
    for k in range(lower, upper.c):
        coloring = solver.decide(g, k)
        if coloring is not None:
            return k, coloring
    return upper.c, upper
