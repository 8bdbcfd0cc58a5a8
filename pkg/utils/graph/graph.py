from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, List, Sequence, Tuple

from utils.errors import NotAnEdgeError, ParameterError

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Recorre los índices de los bits activos de `mask` en orden creciente"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Convierte un conjunto de vértices en máscara de bits"""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """
    Grafo simple no dirigido e inmutable

    Los vértices son 0..n-1 y `adj[v]` es la máscara de bits de N(v).
    Las operaciones que "modifican" el grafo devuelven un grafo nuevo.
    """

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError(f"n debe ser >= 0, se recibió {self.n}")
        if len(self.adj) != self.n:
            raise ParameterError(f"adj tiene {len(self.adj)} entradas para n={self.n}")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ParameterError(f"N({v}) contiene vértices fuera de 0..{self.n - 1}")
            if mask >> v & 1:
                raise ParameterError(f"Lazo en el vértice {v}")
            for u in iter_bits(mask):
                if not self.adj[u] >> v & 1:
                    raise ParameterError(f"Adyacencia asimétrica entre {v} y {u}")

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        """Construye sin validar; solo para adyacencias derivadas de un grafo válido"""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    @classmethod
    def empty(cls, n: int) -> "Graph":
        """Grafo sin aristas sobre n vértices"""
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """
        Construye un grafo a partir de una lista de aristas

        Args:
            n (int): Número de vértices
            edges (Iterable): Pares (u, v) con u != v

        Returns:
            Graph: El grafo construido
        """
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"Arista ({u}, {v}) fuera de 0..{n - 1}")
            if u == v:
                raise ParameterError(f"Lazo en el vértice {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, adj)

    # --- Consultas elementales ---

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self.adj)

    @cached_property
    def edge_count(self) -> int:
        # Lema del apretón de manos
        return sum(self.degrees) // 2

    def edges(self) -> List[Edge]:
        """Aristas (u, v) con u < v en orden lexicográfico"""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def average_degree(self) -> Fraction:
        """d(G) como racional exacto"""
        if self.n == 0:
            return Fraction(0)
        return Fraction(2 * self.edge_count, self.n)

    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def edges_within(self, vertices: Iterable[int]) -> int:
        """e(G[S])"""
        mask = mask_of(vertices)
        return sum((self.adj[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    def bipartite_edges(self, a: Iterable[int], b: Iterable[int]) -> int:
        """
        e(G[A,B]) para conjuntos disjuntos A y B

        Raises:
            ParameterError: Si A y B no son disjuntos
        """
        mask_a, mask_b = mask_of(a), mask_of(b)
        if mask_a & mask_b:
            raise ParameterError("G[A,B] requiere conjuntos disjuntos")
        return sum((self.adj[v] & mask_b).bit_count() for v in iter_bits(mask_a))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = frontier = 1
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= self.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = mask_of(vs)
        return all((self.adj[v] | 1 << v) & mask == mask for v in vs)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = mask_of(vertices)
        return all(not self.adj[v] & mask for v in iter_bits(mask))

    # --- Grafos derivados ---

    def delete_edge(self, u: int, v: int) -> "Graph":
        """
        Devuelve G - uv

        Raises:
            NotAnEdgeError: Si uv no es arista de G
        """
        if not self.has_edge(u, v):
            raise NotAnEdgeError(f"({u}, {v}) no es una arista", {"edge": [u, v]})
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._trusted(self.n, adj)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ParameterError(f"({u}, {v}) no es un par válido")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._trusted(self.n, adj)

    def add_vertex(self, neighbors: Iterable[int]) -> "Graph":
        """Agrega el vértice n adyacente a `neighbors`"""
        mask = mask_of(neighbors)
        if mask >> self.n:
            raise ParameterError("Vecinos fuera de rango para el vértice nuevo")
        adj = [m | (1 << self.n if mask >> v & 1 else 0) for v, m in enumerate(self.adj)]
        adj.append(mask)
        return Graph._trusted(self.n + 1, adj)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """G[S] reetiquetado en el orden creciente de S"""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            adj.append(mask_of(index[u] for u in iter_bits(self.adj[v]) if u in index))
        return Graph._trusted(len(order), adj)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph._trusted(self.n, [full & ~m & ~(1 << v) for v, m in enumerate(self.adj)])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Reetiqueta con perm[viejo] = nuevo"""
        if sorted(perm) != list(range(self.n)):
            raise ParameterError("perm no es una permutación de 0..n-1")
        adj = [0] * self.n
        for v, mask in enumerate(self.adj):
            adj[perm[v]] = mask_of(perm[u] for u in iter_bits(mask))
        return Graph._trusted(self.n, adj)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count})"
