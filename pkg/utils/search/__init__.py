# Módulo de búsqueda: forma canónica, enumeración y tabla de f_k(n)
from .canonical import MAX_CANONICAL_N, canonical_form, canonical_order, refine_colors
from .enumeration import (
    EnumerationResult,
    all_graphs,
    colorable_graphs,
    enumerate_k_critical,
    max_enumeration_n,
)
from .ftable import FRow, construction_lower_bound, f_table, f_table_frame

__all__ = [
    'MAX_CANONICAL_N', 'canonical_form', 'canonical_order', 'refine_colors',
    'EnumerationResult', 'all_graphs', 'colorable_graphs', 'enumerate_k_critical',
    'max_enumeration_n',
    'FRow', 'construction_lower_bound', 'f_table', 'f_table_frame',
]
