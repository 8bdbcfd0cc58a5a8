# Módulo de grafos: representación, graph6 y consultas estructurales
from .graph import Edge, Graph, iter_bits, mask_of
from .graph6 import from_graph6, parse_graph6_lines, to_graph6
from .dot import to_dot
from .structure import (
    TriangleProfile,
    count_cliques,
    exceeds_reiman_threshold,
    heaviest_2path,
    heaviest_4cycle,
    heaviest_edge,
    reiman_threshold,
    triangle_profile,
)

__all__ = [
    'Edge', 'Graph', 'iter_bits', 'mask_of',
    'from_graph6', 'to_graph6', 'parse_graph6_lines', 'to_dot',
    'TriangleProfile', 'count_cliques', 'triangle_profile',
    'heaviest_edge', 'heaviest_2path', 'heaviest_4cycle',
    'reiman_threshold', 'exceeds_reiman_threshold',
]
