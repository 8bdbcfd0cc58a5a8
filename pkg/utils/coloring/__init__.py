# Módulo de coloración exacta
from .coloring import Coloring, verify_coloring
from .solver import DsaturSolver, SolverStats, chromatic_number, greedy_clique, greedy_dsatur, is_k_colorable

__all__ = [
    'Coloring', 'verify_coloring',
    'DsaturSolver', 'SolverStats', 'chromatic_number', 'is_k_colorable',
    'greedy_clique', 'greedy_dsatur',
]
