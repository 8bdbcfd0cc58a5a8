# Módulo de construcciones de grafos críticos y auxiliares
from .families import (
    complete,
    dirac,
    odd_cycle,
    petersen,
    toft,
    toft_parts,
    turan,
    turan_edges,
    turan_parts,
    wheel,
)

__all__ = [
    'turan', 'turan_edges', 'turan_parts', 'toft', 'toft_parts',
    'dirac', 'odd_cycle', 'wheel', 'complete', 'petersen',
]
