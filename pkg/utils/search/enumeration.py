"""
Enumeración exhaustiva, libre de isomorfos, de grafos k-críticos con n pequeño

Un grafo k-crítico G es conexo, tiene grado mínimo >= k-1 y toda subgráfica
propia es (k-1)-coloreable. Si v es un vértice de grado mínimo, H = G - v es
conexo, (k-1)-coloreable y de grado mínimo >= k-2. Por eso se generan todas
las bases H sobre n-1 vértices (extensión por vértices, nivel a nivel, con
forma canónica) y se agrega v con todo conjunto de vecinos S compatible:
|S| >= k-1 y d_H(x) + [x en S] >= |S| para todo x. Cada base es una unidad de
trabajo independiente; la deduplicación final es por forma canónica.
"""

import json
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

from utils.coloring import is_k_colorable
from utils.config import config
from utils.criticality import is_k_critical
from utils.errors import ParameterError, ScaleLimitError
from utils.graph import Graph, count_cliques, from_graph6, iter_bits
from utils.logger import logger
from utils.parallel import ordered_map
from utils.search.canonical import canonical_form

MAX_ALL_GRAPHS_N = 6


def max_enumeration_n(k: int) -> int:
    """Mayor n soportado: 9 para k <= 4, 8 para k >= 5"""
    return 9 if k <= 4 else 8


@dataclass
class EnumerationResult:
    """Grafos k-críticos sobre n vértices, salvo isomorfismo"""

    n: int
    k: int
    graphs: List[str] = field(default_factory=list)
    f_value: Optional[int] = None
    witnesses: List[str] = field(default_factory=list)
    maximum_only: bool = False
    units: int = 0
    candidates: int = 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "maximum_only": self.maximum_only,
            "count": len(self.graphs),
            "graphs": self.graphs,
            "f_value": self.f_value,
            "witnesses": self.witnesses,
            "units": self.units,
            "candidates": self.candidates,
        }


def _check_scale(n: int, k: int) -> None:
    if k < 2:
        raise ParameterError(f"k debe ser >= 2, se recibió {k}", {"k": k})
    if n < 1:
        raise ParameterError(f"n debe ser >= 1, se recibió {n}", {"n": n})
    limit = max_enumeration_n(k)
    if n > limit:
        raise ScaleLimitError(f"La enumeración con k={k} admite n <= {limit}, se recibió n={n}",
                              {"n": n, "k": k, "limit": limit})


def colorable_graphs(size: int, colors: int) -> List[str]:
    """
    Todos los grafos c-coloreables sobre `size` vértices, salvo isomorfismo

    La propiedad es hereditaria, así que cada nivel se obtiene agregando un
    vértice a los grafos del nivel anterior con todo conjunto de vecinos.

    Args:
        size (int): Número de vértices (>= 1)
        colors (int): Número de colores c (>= 1)

    Returns:
        list: Formas canónicas graph6 ordenadas
    """
    level = {canonical_form(Graph.empty(1))}
    for j in range(1, size):
        following: Dict[str, None] = {}
        for key in sorted(level):
            g = from_graph6(key)
            for mask in range(1 << j):
                h = g.add_vertex(iter_bits(mask))
                if is_k_colorable(h, colors, budget=0) is None:
                    continue
                following.setdefault(canonical_form(h), None)
        level = set(following)
        logger.debug(f"Nivel {j + 1}: {len(level)} grafos {colors}-coloreables")
    return sorted(level)


def all_graphs(n: int) -> List[str]:
    """
    Todos los grafos sobre n <= 6 vértices salvo isomorfismo, recorriendo el
    retículo completo de subconjuntos de aristas

    Returns:
        list: Formas canónicas graph6 ordenadas (1, 2, 4, 11, 34, 156 para n = 1..6)
    """
    if n > MAX_ALL_GRAPHS_N:
        raise ScaleLimitError(f"all_graphs admite n <= {MAX_ALL_GRAPHS_N}, se recibió n={n}",
                              {"n": n, "limit": MAX_ALL_GRAPHS_N})
    pairs = list(combinations(range(n), 2))
    forms = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, (pairs[i] for i in iter_bits(mask)))
        forms.add(canonical_form(g))
    return sorted(forms)


def _is_base(h: Graph, k: int) -> bool:
    return h.is_connected() and h.min_degree() >= k - 2


def _creates_forbidden_clique(h: Graph, neighbors: List[int], k: int, n: int) -> bool:
    # H es (k-1)-coloreable, así que un K_k de G pasa por el vértice nuevo
    if n == k:
        return False
    return count_cliques(h.induced_subgraph(neighbors), k - 1) > 0


def _extend_base(task: Tuple[int, str, int, int, int, bool, int]):
    """Unidad de trabajo: todos los candidatos construidos sobre una base"""
    index, base, n, k, bound, maximum_only, budget = task
    h = from_graph6(base)
    deg = h.degrees

    # Conjuntos S que superan los filtros de grado; no depende de la cota
    extensions = 0
    candidates: Dict[str, Tuple[int, Graph]] = {}
    for mask in range(1 << h.n):
        s = mask.bit_count()
        if s < k - 1:
            continue
        floor_degree = max(s, k - 1)
        if any(deg[x] + (mask >> x & 1) < floor_degree for x in range(h.n)):
            continue
        extensions += 1
        edges = h.edge_count + s
        if edges < bound:
            continue
        neighbors = list(iter_bits(mask))
        if _creates_forbidden_clique(h, neighbors, k, n):
            continue
        g = h.add_vertex(neighbors)
        candidates.setdefault(canonical_form(g), (edges, g))

    found: List[Tuple[int, str]] = []
    best = None
    for key, (edges, g) in sorted(candidates.items(), key=lambda item: (-item[1][0], item[0])):
        if maximum_only and best is not None and edges < best:
            break
        if is_k_critical(g, k, budget, jobs=1, stop_early=True).verdict:
            found.append((edges, key))
            best = edges if best is None else best
    return index, found, extensions


def _load_checkpoint(path: Optional[str], n: int, k: int, maximum_only: bool, units: int) -> dict:
    empty = {"n": n, "k": k, "maximum_only": maximum_only, "units": units, "completed": [], "found": []}
    if not path or not os.path.exists(path):
        return empty
    with open(path, "r", encoding="utf-8") as fh:
        state = json.load(fh)
    expected = (n, k, maximum_only, units)
    stored = (state.get("n"), state.get("k"), state.get("maximum_only"), state.get("units"))
    if stored != expected:
        raise ParameterError(f"El checkpoint {path} corresponde a otra enumeración",
                             {"checkpoint": path, "stored": list(stored), "expected": list(expected)})
    logger.info(f"Reanudando desde {path}: {len(state['completed'])}/{units} unidades completas")
    return state


def _save_checkpoint(path: str, state: dict) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(state, fh, sort_keys=True)
    os.replace(tmp, path)


def enumerate_k_critical(n: int, k: int, maximum_only: bool = False, jobs: Optional[int] = None,
                         checkpoint: Optional[str] = None, budget: Optional[int] = None,
                         progress: bool = False) -> EnumerationResult:
    """
    Enumera los grafos k-críticos sobre n vértices salvo isomorfismo

    Args:
        n (int): Número de vértices
        k (int): Número cromático (>= 2)
        maximum_only (bool): Solo los testigos de f_k(n); los candidatos se
            procesan por número de aristas descendente y se descartan los que
            no alcanzan la mejor cota conocida
        jobs (int): Procesos de trabajo (None: configuración)
        checkpoint (str): Archivo JSON para reanudar la enumeración
        budget (int): Límite de nodos por llamada al solver
        progress (bool): Mostrar barra de progreso en stderr

    Returns:
        EnumerationResult: Grafos, f_k(n) y testigos

    Raises:
        ScaleLimitError: Si n supera el límite para k
    """
    _check_scale(n, k)
    budget = (config.solver_budget() if budget is None else budget) or 0
    jobs = config.JOBS if jobs is None else jobs
    result = EnumerationResult(n, k, maximum_only=maximum_only)
    if n < k:
        logger.debug(f"n={n} < k={k}: no hay grafos {k}-críticos")
        return result

    bases = [key for key in colorable_graphs(n - 1, k - 1) if _is_base(from_graph6(key), k)]
    result.units = len(bases)
    state = _load_checkpoint(checkpoint, n, k, maximum_only, len(bases))
    completed = set(state["completed"])
    found = {key: from_graph6(key).edge_count for key in state["found"]}

    # Cota compartida: se lee al enviar cada unidad
    best = [max(found.values(), default=0) if maximum_only else 0]
    pending = [i for i in range(len(bases)) if i not in completed]

    def tasks():
        for i in pending:
            yield i, bases[i], n, k, best[0], maximum_only, budget

    logger.debug(f"enumerate_k_critical(n={n}, k={k}): {len(bases)} bases, {len(pending)} pendientes")
    units = ordered_map(_extend_base, tasks(), jobs)
    for index, unit_found, count in tqdm(units, total=len(pending), desc=f"n={n} k={k}",
                                         unit=" base", disable=not progress):
        result.candidates += count
        for edges, key in unit_found:
            found[key] = edges
            if maximum_only:
                best[0] = max(best[0], edges)
        completed.add(index)
        if checkpoint:
            state["completed"] = sorted(completed)
            state["found"] = sorted(found)
            _save_checkpoint(checkpoint, state)

    if found:
        result.f_value = max(found.values())
        result.witnesses = sorted(key for key, edges in found.items() if edges == result.f_value)
    if maximum_only:
        result.graphs = list(result.witnesses)
    else:
        result.graphs = sorted(found, key=lambda key: (-found[key], key))
    logger.debug(f"n={n} k={k}: {len(result.graphs)} grafos, f={result.f_value}, "
                 f"{result.candidates} candidatos")
    return result
