"""
Consultas estructurales: cliques, triángulos y aristas / 2-caminos / 4-ciclos pesados

Todas las búsquedas "heaviest_*" son exactas y desempatan por la tupla de
vértices lexicográficamente menor.
"""

import math
from dataclasses import dataclass
from typing import Tuple

from utils.errors import InvariantError, NoEdgeError, NoFourCycleError, NoTwoPathError, ParameterError
from utils.graph.graph import Graph, iter_bits


@dataclass(frozen=True)
class TriangleProfile:
    """t(v) por vértice y t(G) total"""

    per_vertex: Tuple[int, ...]
    total: int

    def to_dict(self) -> dict:
        return {"per_vertex": list(self.per_vertex), "total": self.total}


def count_cliques(g: Graph, t: int) -> int:
    """
    Cuenta los subconjuntos de t vértices que inducen un grafo completo

    Args:
        g (Graph): Grafo
        t (int): Tamaño de la clique (>= 1)

    Returns:
        int: Número exacto de copias de K_t
    """
    if t < 1:
        raise ParameterError(f"t debe ser >= 1, se recibió {t}")
    if t == 1:
        return g.n
    if t == 2:
        return g.edge_count

    # Extensión por bits: cada clique se cuenta una vez con vértices crecientes
    def extend(candidates: int, remaining: int) -> int:
        if remaining == 0:
            return 1
        if candidates.bit_count() < remaining:
            return 0
        if remaining == 1:
            return candidates.bit_count()
        total = 0
        for v in iter_bits(candidates):
            total += extend(candidates & g.adj[v] & ~((2 << v) - 1), remaining - 1)
        return total

    return sum(extend(g.adj[v] & ~((2 << v) - 1), t - 1) for v in range(g.n))


def triangle_profile(g: Graph) -> TriangleProfile:
    """
    Calcula t(v) para cada vértice y t(G)

    Returns:
        TriangleProfile: Perfil exacto; la suma de t(v) es 3 t(G)
    """
    per_vertex = []
    for v in range(g.n):
        nv = g.adj[v]
        per_vertex.append(sum((g.adj[u] & nv).bit_count() for u in iter_bits(nv)) // 2)
    return TriangleProfile(tuple(per_vertex), sum(per_vertex) // 3)


def heaviest_edge(g: Graph) -> Tuple[Tuple[int, int], int]:
    """
    Arista xy que maximiza d(x) + d(y)

    Returns:
        tuple: ((x, y), d(x) + d(y)); la suma es siempre >= 2 d(G)

    Raises:
        NoEdgeError: Si el grafo no tiene aristas
        InvariantError: Si la suma máxima queda por debajo de 2 d(G)
    """
    deg = g.degrees
    best = None
    for u, v in g.edges():
        value = deg[u] + deg[v]
        if best is None or value > best[1]:
            best = ((u, v), value)
    if best is None:
        raise NoEdgeError("El grafo no tiene aristas")
    # Promedio sobre aristas: sum_xy (d(x)+d(y)) = sum_v d(v)^2 >= n d(G)^2
    if best[1] * g.n < 4 * g.edge_count:
        raise InvariantError("d(x)+d(y) < 2d(G): contradice el promedio sobre aristas",
                             {"edge": list(best[0]), "value": best[1], "n": g.n, "edges": g.edge_count})
    return best


def _two_path_scores(g: Graph) -> Tuple[int, ...]:
    triangles = triangle_profile(g).per_vertex
    return tuple(d - 3 * t for d, t in zip(g.degrees, triangles))


def heaviest_2path(g: Graph) -> Tuple[Tuple[int, int, int], int]:
    """
    2-camino ordenado x-y-z que maximiza d(x)+d(y)+d(z)-3t(x)-3t(z)

    Returns:
        tuple: ((x, y, z), valor)

    Raises:
        NoTwoPathError: Si ningún vértice tiene grado >= 2
    """
    score = _two_path_scores(g)
    deg = g.degrees

    # Máximo exacto: para cada centro y bastan los dos vecinos de mayor puntaje
    best = None
    for y in range(g.n):
        if deg[y] < 2:
            continue
        top = sorted((score[v] for v in iter_bits(g.adj[y])), reverse=True)[:2]
        value = deg[y] + top[0] + top[1]
        if best is None or value > best:
            best = value
    if best is None:
        raise NoTwoPathError("Ningún vértice tiene grado >= 2")

    # Desempate: la primera tupla (x, y, z) en orden lexicográfico con el valor máximo
    for x in range(g.n):
        for y in iter_bits(g.adj[x]):
            for z in iter_bits(g.adj[y] & ~(1 << x)):
                if score[x] + deg[y] + score[z] == best:
                    return (x, y, z), best
    raise InvariantError("Máximo de 2-caminos no alcanzado")


def heaviest_4cycle(g: Graph) -> Tuple[Tuple[int, int, int, int], int]:
    """
    4-ciclo v1v2v3v4 que maximiza d(v1)+d(v2)+d(v3)+d(v4)

    Recorre pares de vértices opuestos e intersecta vecindarios por bits.
    El ciclo se devuelve empezando por su vértice mínimo y con v2 < v4.

    Returns:
        tuple: ((v1, v2, v3, v4), suma de grados)

    Raises:
        NoFourCycleError: Si el grafo no contiene 4-ciclos
    """
    deg = g.degrees
    best = None
    for a in range(g.n):
        for c in range(a + 1, g.n):
            common = g.adj[a] & g.adj[c]
            if common.bit_count() < 2:
                continue
            top = sorted((deg[v] for v in iter_bits(common)), reverse=True)[:2]
            value = deg[a] + deg[c] + top[0] + top[1]
            if best is None or value > best:
                best = value
    if best is None:
        raise NoFourCycleError(
            "El grafo no contiene 4-ciclos",
            {"edges": g.edge_count, "reiman_threshold": reiman_threshold(g.n)},
        )

    top_degree = g.max_degree()
    for v1 in range(g.n):
        for v2 in iter_bits(g.adj[v1] >> (v1 + 1) << (v1 + 1)):
            if deg[v1] + deg[v2] + 2 * top_degree < best:
                continue
            for v3 in iter_bits(g.adj[v2] >> (v1 + 1) << (v1 + 1)):
                for v4 in iter_bits(g.adj[v3] & g.adj[v1] >> (v2 + 1) << (v2 + 1)):
                    if deg[v1] + deg[v2] + deg[v3] + deg[v4] == best:
                        return (v1, v2, v3, v4), best
    raise InvariantError("Máximo de 4-ciclos no alcanzado")


def reiman_threshold(n: int) -> float:
    """Umbral n(1+sqrt(4n-3))/4 sobre el que todo grafo contiene un 4-ciclo (solo para mostrar)"""
    if n < 1:
        return 0.0
    return n * (1 + math.sqrt(4 * n - 3)) / 4


def exceeds_reiman_threshold(n: int, e: int) -> bool:
    """
    Compara e > n(1+sqrt(4n-3))/4 con aritmética entera exacta

    Args:
        n (int): Número de vértices
        e (int): Número de aristas

    Returns:
        bool: True si e supera el umbral (y por tanto hay un 4-ciclo)
    """
    if n < 1:
        return False
    lhs = 4 * e - n
    return lhs > 0 and lhs * lhs > n * n * (4 * n - 3)
