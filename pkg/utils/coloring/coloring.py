from dataclasses import dataclass
from typing import List, Sequence, Tuple

from utils.graph import Graph


@dataclass(frozen=True)
class Coloring:
    """
    Asignación vértice -> color con colores 0..c-1

    Se construye solo a partir de una lista de colores; la propiedad de ser
    propia se comprueba contra un grafo con `is_proper`, nunca se asume.
    """

    colors: Tuple[int, ...]

    @classmethod
    def of(cls, colors: Sequence[int]) -> "Coloring":
        return cls(tuple(colors))

    @property
    def c(self) -> int:
        """Número de colores usados"""
        return len(set(self.colors))

    def classes(self) -> List[List[int]]:
        """Clases de color C_1, C_2, ... como listas ordenadas de vértices"""
        groups = {}
        for v, color in enumerate(self.colors):
            groups.setdefault(color, []).append(v)
        return [groups[color] for color in sorted(groups)]

    def class_of(self, v: int) -> List[int]:
        return [u for u, color in enumerate(self.colors) if color == self.colors[v]]

    def is_proper(self, g: Graph) -> bool:
        """Ninguna arista tiene ambos extremos del mismo color (O(e))"""
        if len(self.colors) != g.n:
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())

    def to_dict(self) -> dict:
        return {"c": self.c, "colors": list(self.colors)}


def verify_coloring(g: Graph, coloring: Coloring, k: int = None) -> bool:
    """
    Verificación independiente de un certificado de coloración

    Args:
        g (Graph): Grafo
        coloring (Coloring): Certificado
        k (int): Si se indica, exige además a lo sumo k colores

    Returns:
        bool: True si la coloración es propia (y usa <= k colores)
    """
    if not coloring.is_proper(g):
        return False
    return k is None or coloring.c <= k
