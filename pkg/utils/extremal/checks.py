"""
Comprobadores de las desigualdades sobre grafos críticos concretos
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from utils.extremal.bounds import exact_value
from utils.graph import (
    Graph,
    count_cliques,
    exceeds_reiman_threshold,
    heaviest_2path,
    heaviest_4cycle,
    heaviest_edge,
    reiman_threshold,
    triangle_profile,
)


@dataclass(frozen=True)
class TwoPathCheck:
    """Máximo de d(x)+d(y)+d(z)-3t(x)-3t(z) frente a n+1 y a la cota por promedio"""

    path: Tuple[int, int, int]
    max_value: int
    cap: int
    verdict: bool
    averaging_bound: Fraction
    averaging_hypotheses: bool
    averaging_met: bool

    def to_dict(self) -> dict:
        return {
            "path": list(self.path),
            "max_value": self.max_value,
            "cap": self.cap,
            "verdict": self.verdict,
            "averaging_bound": exact_value(self.averaging_bound),
            "averaging_hypotheses": self.averaging_hypotheses,
            "averaging_met": self.averaging_met,
        }


@dataclass(frozen=True)
class CliqueCapCheck:
    """Copias de K_{k-1} frente a las cotas n y n-k+3"""

    k: int
    count: int
    n_cap: int
    sharp_cap: int
    n_cap_verdict: bool
    sharp_cap_verdict: Optional[bool]

    @property
    def verdict(self) -> bool:
        return self.n_cap_verdict and self.sharp_cap_verdict is not False

    def to_dict(self) -> dict:
        report = {
            "k": self.k,
            "count": self.count,
            "n_cap": self.n_cap,
            "sharp_cap": self.sharp_cap,
            "n_cap_verdict": self.n_cap_verdict,
            "sharp_cap_verdict": self.sharp_cap_verdict,
            "verdict": self.verdict,
        }
        if self.k == 4:
            # Con k = 4 se cuentan triángulos: t(G) <= n
            report["triangle_cap_verdict"] = self.n_cap_verdict
        return report


def check_2path_bound(g: Graph) -> TwoPathCheck:
    """
    Recorre todos los 2-caminos ordenados y compara el máximo con n + 1

    La cota n + 1 vale para todo grafo 4-crítico; un veredicto falso refuta
    la criticidad de la entrada. También informa la cota inferior por
    promedio 6e/n - 9n^2/e, que se garantiza si t(G) <= n y el grado mínimo es >= 3.

    Args:
        g (Graph): Grafo 4-crítico (verificado por quien llama)

    Returns:
        TwoPathCheck: Resultado de la comprobación
    """
    path, value = heaviest_2path(g)
    e = g.edge_count
    averaging = Fraction(6 * e, g.n) - Fraction(9 * g.n * g.n, e)
    hypotheses = triangle_profile(g).total <= g.n and g.min_degree() >= 3
    return TwoPathCheck(
        path=path,
        max_value=value,
        cap=g.n + 1,
        verdict=value <= g.n + 1,
        averaging_bound=averaging,
        averaging_hypotheses=hypotheses,
        averaging_met=value >= averaging,
    )


def check_clique_caps(g: Graph, k: int) -> CliqueCapCheck:
    """
    Cuenta las copias de K_{k-1} y las compara con n y con n - k + 3

    La cota n - k + 3 solo aplica con n > k; si no, su veredicto es None.

    Args:
        g (Graph): Grafo k-crítico (verificado por quien llama)
        k (int): k >= 4

    Returns:
        CliqueCapCheck: Conteo, cotas y veredictos
    """
    count = count_cliques(g, k - 1)
    sharp = g.n - k + 3
    return CliqueCapCheck(
        k=k,
        count=count,
        n_cap=g.n,
        sharp_cap=sharp,
        n_cap_verdict=count <= g.n,
        sharp_cap_verdict=count <= sharp if g.n > k else None,
    )


def check_heavy_edge(g: Graph) -> dict:
    """Arista con d(x)+d(y) >= 2d(G), exacta y sin tolerancia"""
    edge, value = heaviest_edge(g)
    twice_average = 2 * g.average_degree()
    return {
        "edge": list(edge),
        "degree_sum": value,
        "twice_average_degree": exact_value(twice_average),
        "verdict": value >= twice_average,
    }


def check_4cycle(g: Graph) -> dict:
    """
    4-ciclo más pesado junto a 4d(G) y al umbral de Reiman

    No lleva veredicto: el término de error del lema de 4-ciclos no es
    informativo a esta escala.
    """
    four_average = 4 * g.average_degree()
    report = {
        "edges": g.edge_count,
        "reiman_threshold": reiman_threshold(g.n),
        "exceeds_reiman": exceeds_reiman_threshold(g.n, g.edge_count),
        "four_average_degree": exact_value(four_average),
    }
    cycle, value = heaviest_4cycle(g)
    report.update({
        "cycle": list(cycle),
        "degree_sum": value,
        "deficit": exact_value(four_average - value),
    })
    return report
