"""
Generadores de las familias de grafos usadas por el proyecto

Convenciones de etiquetas:
- turan(n, r): partes contiguas, las más grandes primero.
- toft(m): A = 0..m-1, B = m..2m-1, C = 2m..3m-1, D = 3m..4m-1; a_i-b_i y c_i-d_i.
- dirac(m): primer ciclo 0..m-1, segundo m..2m-1.
- wheel(m): borde 0..m-1 en orden cíclico, centro m.
"""

from math import comb
from typing import Dict, List

from utils.errors import ParameterError
from utils.graph import Graph


def _require_odd(m: int, name: str) -> None:
    if m < 3 or m % 2 == 0:
        raise ParameterError(f"{name} requiere m impar >= 3, se recibió {m}", {"m": m})


def _cycle_edges(vertices: List[int]) -> List[tuple]:
    return [(vertices[i], vertices[(i + 1) % len(vertices)]) for i in range(len(vertices))]


def turan_parts(n: int, r: int) -> List[List[int]]:
    """
    Partes balanceadas del grafo de Turán T_r(n)

    Args:
        n (int): Número de vértices
        r (int): Número de partes, 1 <= r <= n

    Returns:
        list: Partes como listas de vértices contiguos, tamaños no crecientes
    """
    if r < 1 or r > n:
        raise ParameterError(f"Turán requiere 1 <= r <= n, se recibió r={r}, n={n}", {"n": n, "r": r})
    q, extra = divmod(n, r)
    parts, start = [], 0
    for i in range(r):
        size = q + 1 if i < extra else q
        parts.append(list(range(start, start + size)))
        start += size
    return parts


def turan(n: int, r: int) -> Graph:
    """Grafo r-partito completo balanceado T_r(n)"""
    owner = {}
    for index, part in enumerate(turan_parts(n, r)):
        for v in part:
            owner[v] = index
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]])


def turan_edges(n: int, r: int) -> int:
    """
    e(T_r(n)) = C(n,2) - sum C(n_i,2) con tamaños balanceados

    Args:
        n (int): Número de vértices
        r (int): Número de partes, 1 <= r <= n

    Returns:
        int: Número exacto de aristas
    """
    if r < 1 or r > n:
        raise ParameterError(f"Turán requiere 1 <= r <= n, se recibió r={r}, n={n}", {"n": n, "r": r})
    q, extra = divmod(n, r)
    return comb(n, 2) - extra * comb(q + 1, 2) - (r - extra) * comb(q, 2)


def toft_parts(m: int) -> Dict[str, List[int]]:
    """Etiquetas de las partes A, B, C, D del grafo de Toft"""
    _require_odd(m, "toft")
    return {name: list(range(i * m, (i + 1) * m)) for i, name in enumerate("ABCD")}


def toft(m: int) -> Graph:
    """
    Grafo de Toft sobre n = 4m vértices (m impar >= 3)

    A y D inducen m-ciclos, B y C son independientes, B-C es bipartito completo,
    y (A,B), (C,D) son emparejamientos perfectos de índices iguales.
    Tiene m^2 + 4m = n^2/16 + n aristas y es 4-crítico.
    """
    parts = toft_parts(m)
    a, b, c, d = parts["A"], parts["B"], parts["C"], parts["D"]
    edges = _cycle_edges(a) + _cycle_edges(d)
    edges += [(x, y) for x in b for y in c]
    edges += list(zip(a, b)) + list(zip(c, d))
    return Graph.from_edges(4 * m, edges)


def dirac(m: int) -> Graph:
    """Unión completa (join) de dos copias disjuntas de C_m, m impar: 6-crítico con n^2/4 + n aristas"""
    _require_odd(m, "dirac")
    first, second = list(range(m)), list(range(m, 2 * m))
    edges = _cycle_edges(first) + _cycle_edges(second) + [(x, y) for x in first for y in second]
    return Graph.from_edges(2 * m, edges)


def odd_cycle(m: int) -> Graph:
    """C_m con m impar >= 3 (los grafos 3-críticos)"""
    _require_odd(m, "odd_cycle")
    return Graph.from_edges(m, _cycle_edges(list(range(m))))


def wheel(m: int) -> Graph:
    """C_m unido a un centro (última etiqueta); 4-crítico cuando m es impar"""
    if m < 3:
        raise ParameterError(f"wheel requiere m >= 3, se recibió {m}", {"m": m})
    return Graph.from_edges(m + 1, _cycle_edges(list(range(m))) + [(v, m) for v in range(m)])


def complete(n: int) -> Graph:
    """K_n"""
    if n < 1:
        raise ParameterError(f"complete requiere n >= 1, se recibió {n}", {"n": n})
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def petersen() -> Graph:
    """Grafo de Petersen: ciclo exterior 0..4, estrella interior 5..9"""
    outer = _cycle_edges(list(range(5)))
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
