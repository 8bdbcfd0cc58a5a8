# Módulo de criticidad
from .criticality import (
    CriticalityReport,
    EdgeEvidence,
    critical_core,
    critical_core_support,
    is_k_critical,
    is_odd_cycle,
)

__all__ = [
    'CriticalityReport', 'EdgeEvidence', 'is_k_critical',
    'critical_core', 'critical_core_support', 'is_odd_cycle',
]
