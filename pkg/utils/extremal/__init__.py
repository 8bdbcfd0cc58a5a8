# Módulo extremal: cotas de f_k(n), comprobadores y particiones de estabilidad
from .bounds import (
    C4_TOFT,
    C5_TOFT,
    THM2_CONSTANT,
    VALIDITY,
    BoundRow,
    bound_row,
    bound_table,
    bound_table_frame,
    delta_k,
    exact_value,
    toft_lower_constant,
    weak_bound_from_2path,
)
from .checks import CliqueCapCheck, TwoPathCheck, check_2path_bound, check_4cycle, check_clique_caps, check_heavy_edge
from .partition import PartitionEval, evaluate_partition, stability_partition

__all__ = [
    'C4_TOFT', 'C5_TOFT', 'THM2_CONSTANT', 'VALIDITY',
    'BoundRow', 'bound_row', 'bound_table', 'bound_table_frame',
    'delta_k', 'exact_value', 'toft_lower_constant', 'weak_bound_from_2path',
    'CliqueCapCheck', 'TwoPathCheck', 'check_2path_bound', 'check_4cycle',
    'check_clique_caps', 'check_heavy_edge',
    'PartitionEval', 'evaluate_partition', 'stability_partition',
]
