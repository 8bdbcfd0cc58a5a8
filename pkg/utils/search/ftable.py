"""
Tabla de f_k(n) calculada por enumeración exacta

Cada fila se contrasta con la cota e(T_{k-2}(n)) + n - k + 3 (válida para
todo n > k) y con la mejor construcción explícita disponible.
"""

import os
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import pandas as pd

from utils.constructions import turan_edges
from utils.errors import ParameterError
from utils.logger import logger
from utils.search.enumeration import enumerate_k_critical


@dataclass
class FRow:
    """f_k(n) para un n con sus testigos y contrastes"""

    n: int
    k: int
    f_value: Optional[int]
    witnesses: List[str] = field(default_factory=list)
    gao_ma_cap: Optional[int] = None
    within_cap: Optional[bool] = None
    construction: Optional[str] = None
    construction_edges: Optional[int] = None
    meets_construction: Optional[bool] = None
    witness_files: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "f_value": self.f_value,
            "witnesses": self.witnesses,
            "gao_ma_cap": self.gao_ma_cap,
            "within_cap": self.within_cap,
            "construction": self.construction,
            "construction_edges": self.construction_edges,
            "meets_construction": self.meets_construction,
            "witness_files": self.witness_files,
        }


def construction_lower_bound(n: int, k: int) -> Optional[Tuple[int, str]]:
    """
    Mejor construcción explícita k-crítica sobre n vértices

    Args:
        n (int): Número de vértices
        k (int): Número cromático

    Returns:
        tuple: (aristas, nombre) o None si no hay construcción disponible
    """
    options = []
    if n == k:
        options.append((k * (k - 1) // 2, f"K{k}"))
    if k == 3 and n >= 3 and n % 2 == 1:
        options.append((n, f"cycle({n})"))
    if k == 4 and n >= 4 and (n - 1) % 2 == 1:
        options.append((2 * (n - 1), f"wheel({n - 1})"))
    if k == 4 and n % 4 == 0 and (n // 4) % 2 == 1 and n >= 12:
        options.append((n * n // 16 + n, f"toft({n // 4})"))
    if k == 6 and n % 2 == 0 and (n // 2) % 2 == 1 and n >= 6:
        options.append((n * n // 4 + n, f"dirac({n // 2})"))
    if not options:
        return None
    return max(options, key=lambda option: (option[0], option[1]))


def _write_witnesses(row: FRow, output_dir: str) -> None:
    os.makedirs(output_dir, exist_ok=True)
    for i, key in enumerate(row.witnesses):
        path = os.path.join(output_dir, f"f{row.k}_n{row.n}_{i}.g6")
        with open(path, "w", encoding="ascii") as fh:
            fh.write(key + "\n")
        row.witness_files.append(path)


def f_table(k: int, n_max: int, jobs: Optional[int] = None, budget: Optional[int] = None,
            output_dir: Optional[str] = None, progress: bool = False) -> List[FRow]:
    """
    Calcula f_k(n) para n = k..n_max

    Args:
        k (int): Número cromático (>= 2)
        n_max (int): Mayor n (dentro de los límites de enumeración)
        jobs (int): Procesos de trabajo
        budget (int): Límite de nodos por llamada al solver
        output_dir (str): Si se indica, un archivo graph6 por testigo
        progress (bool): Mostrar progreso

    Returns:
        list: Una FRow por n; f_value es None si no existe grafo k-crítico
    """
    if n_max < k:
        raise ParameterError(f"n_max debe ser >= k, se recibió n_max={n_max}, k={k}",
                             {"k": k, "n_max": n_max})
    rows = []
    for n in range(k, n_max + 1):
        result = enumerate_k_critical(n, k, maximum_only=True, jobs=jobs, budget=budget,
                                      progress=progress)
        row = FRow(n, k, result.f_value, list(result.witnesses))
        if n > k and k >= 3:
            row.gao_ma_cap = turan_edges(n, k - 2) + n - k + 3
            row.within_cap = row.f_value is None or row.f_value <= row.gao_ma_cap
        construction = construction_lower_bound(n, k)
        if construction is not None:
            row.construction_edges, row.construction = construction
            row.meets_construction = row.f_value is not None and row.f_value >= row.construction_edges
        if row.within_cap is False or row.meets_construction is False:
            logger.error(f"f_{k}({n}) = {row.f_value} contradice una cota conocida")
        if output_dir:
            _write_witnesses(row, output_dir)
        logger.info(f"f_{k}({n}) = {row.f_value} ({len(row.witnesses)} testigos)")
        rows.append(row)
    return rows


def f_table_frame(rows: List[FRow]) -> pd.DataFrame:
    """DataFrame de la tabla (testigos unidos por espacios) para CSV / XLSX"""
    records = []
    for row in rows:
        record = row.to_dict()
        record["witnesses"] = " ".join(row.witnesses)
        record["witness_files"] = " ".join(row.witness_files)
        records.append(record)
    return pd.DataFrame(records)
