"""
Jerarquía de errores del proyecto

Cada error lleva el código de salida que usa main.py:
1 para errores de dominio, 2 para errores de uso y 3 para presupuesto agotado.
"""

from typing import Any, Dict, Optional


class CritlabError(Exception):
    """Error base de critlab"""

    exit_code = 1
    kind = "error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Representación JSON del error"""
        return {"kind": self.kind, "message": self.message, "details": self.details}


class Graph6ParseError(CritlabError):
    """Cadena graph6 mal formada; indica el byte donde falla"""

    kind = "graph6-parse"

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})", {"offset": offset})
        self.offset = offset


class ParameterError(CritlabError, ValueError):
    """Parámetro fuera de rango"""

    kind = "parameter"


class UsageError(CritlabError):
    """Uso incorrecto de la línea de comandos"""

    exit_code = 2
    kind = "usage"


class NotAnEdgeError(CritlabError):
    """El par de vértices no es una arista"""

    kind = "not-an-edge"


class NoEdgeError(CritlabError):
    """El grafo no tiene aristas"""

    kind = "no-edge"


class NoTwoPathError(CritlabError):
    """El grafo no contiene ningún 2-camino"""

    kind = "no-2path"


class NoFourCycleError(CritlabError):
    """El grafo no contiene ningún 4-ciclo"""

    kind = "no-4cycle"


class BudgetExceededError(CritlabError):
    """El solver superó el límite de nodos; nunca se devuelve una respuesta adivinada"""

    exit_code = 3
    kind = "budget-exceeded"

    def __init__(self, budget: int, partial: Optional[Dict[str, Any]] = None, message: Optional[str] = None):
        super().__init__(message or f"Presupuesto de búsqueda agotado ({budget} nodos)", {"budget": budget})
        self.budget = budget
        self.partial = partial


class IndeterminateError(BudgetExceededError):
    """La criticidad quedó sin decidir porque una subllamada agotó el presupuesto"""

    kind = "indeterminate"

    def __init__(self, budget: int, edge=None, partial: Optional[Dict[str, Any]] = None):
        super().__init__(budget, partial, f"Veredicto indeterminado: presupuesto agotado ({budget} nodos)")
        if edge is not None:
            self.details["edge"] = list(edge)
        self.edge = edge


class PreconditionError(CritlabError):
    """No se cumple la precondición de la operación"""

    kind = "precondition"


class HypothesisError(PreconditionError):
    """Una hipótesis del lema no se cumple; `hypothesis` nombra cuál"""

    kind = "hypothesis"

    def __init__(self, hypothesis: str, message: str, details: Optional[Dict[str, Any]] = None):
        details = dict(details or {})
        details["hypothesis"] = hypothesis
        super().__init__(message, details)
        self.hypothesis = hypothesis


class NotCriticalError(CritlabError):
    """Evidencia de que la entrada no es k-crítica (p. ej. una coloración que la refuta)"""

    kind = "not-critical"


class ScaleLimitError(CritlabError):
    """La instancia excede la escala garantizada"""

    kind = "scale-limit"


class InvariantError(CritlabError):
    """Un invariante que siempre debe cumplirse no se cumple (error interno o entrada corrupta)"""

    kind = "invariant"
