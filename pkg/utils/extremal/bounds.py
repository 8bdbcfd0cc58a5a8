"""
Cotas cerradas de f_k(n) evaluadas de forma exacta

Todos los valores son enteros o Fraction; nunca se guarda un flotante.
Las cotas asintóticas se etiquetan como tales y no se comparan con
resultados de enumeración a n pequeño.
"""

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import floor, isqrt
from typing import Dict, Iterable, List, Optional

import pandas as pd

from utils.constructions import turan_edges
from utils.errors import ParameterError

# 0.164 como racional exacto
THM2_CONSTANT = Fraction(41, 250)
C4_TOFT = Fraction(1, 16)
C5_TOFT = Fraction(4, 31)

VALIDITY = {
    "turan_trivial": "all n > k",
    "stiebitz": "large-n only",
    "thm1": "large-n only; c_k n^2 floored",
    "gao_ma": "all n > k",
    "thm2_4crit": "large-n only",
    "weak_4crit": "all n >= 4",
    "twopath_cap": "all n >= 4 (combined 2-path lemmas)",
    "toft_lower": "infinitely many n (construction constant)",
    "dirac_lower": "n = 2m, m odd",
    "kk2_barrier": "limit of the K_{k-2} argument",
    "thm1_exact": "large-n only; c_k n^2 exact, always below stiebitz",
}


@dataclass(frozen=True)
class BoundRow:
    """Todas las cotas de f_k(n) para un par (n, k)"""

    n: int
    k: int
    turan_trivial: int
    stiebitz: int
    thm1: int
    gao_ma: int
    thm2_4crit: Optional[int] = None
    weak_4crit: Optional[int] = None
    twopath_cap: Optional[int] = None
    toft_lower: Optional[Fraction] = None
    dirac_lower: Optional[Fraction] = None
    kk2_barrier: Optional[int] = None
    thm1_exact: Optional[Fraction] = None

    def to_dict(self) -> Dict[str, object]:
        return {name: exact_value(value) for name, value in asdict(self).items()}


def exact_value(value):
    """Entero tal cual, racional como 'p/q', None como None"""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    return value


def delta_k(k: int) -> Fraction:
    """
    Corrección delta_k de la cota inferior (1/2 - 3/(2k - delta_k)) n^2

    Args:
        k (int): k >= 6

    Returns:
        Fraction: 0, 8/7 o 44/23 según k mod 3 = 0, 1, 2
    """
    if k < 6:
        raise ParameterError(f"delta_k requiere k >= 6, se recibió {k}", {"k": k})
    return (Fraction(0), Fraction(8, 7), Fraction(44, 23))[k % 3]


def toft_lower_constant(k: int) -> Fraction:
    """Constante c_k de las construcciones de tipo Toft: 1/16, 4/31 o 1/2 - 3/(2k - delta_k)"""
    if k == 4:
        return C4_TOFT
    if k == 5:
        return C5_TOFT
    if k >= 6:
        return Fraction(1, 2) - Fraction(3) / (2 * k - delta_k(k))
    raise ParameterError(f"No hay constante de Toft para k={k}", {"k": k})


def weak_bound_from_2path(n: int) -> int:
    """
    Mayor e con 6e/n - 9n^2/e <= n + 1

    Es la cota de aristas que resulta de combinar la cota inferior por
    promedio de 2-caminos con la cota superior n + 1 en grafos 4-críticos.
    """
    if n < 1:
        raise ParameterError("n debe ser >= 1")
    b = (n + 1) * n
    c = 9 * n ** 3

    def fits(e: int) -> bool:
        return 6 * e * e - b * e - c <= 0

    e = (b + isqrt(b * b + 24 * c)) // 12
    while fits(e + 1):
        e += 1
    while e > 0 and not fits(e):
        e -= 1
    return e


def bound_row(n: int, k: int) -> BoundRow:
    """Evalúa todas las cotas para un par (n, k) con n > k >= 4"""
    if k < 4:
        raise ParameterError(f"bound_table requiere k >= 4, se recibió {k}", {"k": k})
    if n <= k:
        raise ParameterError(f"Se requiere n > k, se recibió n={n}, k={k}", {"n": n, "k": k})
    stiebitz = turan_edges(n, k - 2)
    return BoundRow(
        n=n,
        k=k,
        turan_trivial=turan_edges(n, k - 1),
        stiebitz=stiebitz,
        thm1=stiebitz - (n * n) // (36 * (k - 1) ** 2),
        gao_ma=stiebitz + n - k + 3,
        thm2_4crit=floor(THM2_CONSTANT * n * n) if k == 4 else None,
        weak_4crit=floor(Fraction(n * n, 6) + 10 * n) if k == 4 else None,
        twopath_cap=weak_bound_from_2path(n) if k == 4 else None,
        toft_lower=toft_lower_constant(k) * n * n,
        dirac_lower=Fraction(n * n, 4) + n if k == 6 else None,
        kk2_barrier=turan_edges(n, k - 3) if k >= 5 else None,
        thm1_exact=stiebitz - Fraction(n * n, 36 * (k - 1) ** 2),
    )


def bound_table(k: int, n_values: Iterable[int]) -> List[BoundRow]:
    """
    Tabla de cotas para varios n

    Args:
        k (int): k >= 4
        n_values (Iterable): Valores de n, cada uno > k

    Returns:
        list: Una BoundRow por valor de n, en el orden dado
    """
    return [bound_row(n, k) for n in n_values]


def bound_table_frame(rows: List[BoundRow]) -> pd.DataFrame:
    """DataFrame con los valores exactos (racionales como 'p/q') para CSV / XLSX"""
    return pd.DataFrame([row.to_dict() for row in rows])
