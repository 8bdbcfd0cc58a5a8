import os
from typing import Optional

from dotenv import load_dotenv

from utils.errors import ParameterError
from utils.logger import logger

# Cargar variables de entorno
load_dotenv()


def _read_int(name: str, default: int, minimum: int = 0) -> int:
    """
    Lee una variable de entorno entera

    Args:
        name (str): Nombre de la variable
        default (int): Valor si no está definida
        minimum (int): Valor mínimo aceptado

    Returns:
        int: Valor leído
    """
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(f"{name} debe ser un entero, se recibió '{raw}'", {"variable": name})
    if value < minimum:
        raise ParameterError(f"{name} debe ser >= {minimum}, se recibió {value}", {"variable": name})
    return value


class CritlabConfig:
    """Configuración de critlab"""

    DEFAULT_BUDGET = 5_000_000

    def __init__(self):
        self.BUDGET = self.DEFAULT_BUDGET
        self.JOBS = 1
        self.SEED = 0
        self.OUTPUT_DIR = "output"
        try:
            self.reload()
        except ParameterError as e:
            # Se vuelve a lanzar cuando main.py recarga la configuración
            logger.warning(f"Configuración inválida, se usan los valores por defecto: {e.message}")

    def reload(self) -> None:
        """Vuelve a leer los valores desde las variables de entorno"""
        self.BUDGET = _read_int('CRITLAB_BUDGET', self.DEFAULT_BUDGET)
        self.JOBS = _read_int('CRITLAB_JOBS', 1, minimum=1)
        self.SEED = _read_int('CRITLAB_SEED', 0)
        self.OUTPUT_DIR = os.getenv('CRITLAB_OUTPUT_DIR', 'output')

        if self.BUDGET == 0:
            logger.debug("CRITLAB_BUDGET=0: búsqueda sin límite de nodos")

    def solver_budget(self) -> Optional[int]:
        """Límite de nodos del solver; None significa sin límite"""
        return self.BUDGET or None

    def override(self, budget: Optional[int] = None, jobs: Optional[int] = None,
                 seed: Optional[int] = None, output_dir: Optional[str] = None) -> None:
        """
        Aplica los valores pasados por línea de comandos sobre los del entorno

        Args:
            budget (int): Límite de nodos del solver (0 = sin límite)
            jobs (int): Número de procesos de trabajo
            seed (int): Semilla global
            output_dir (str): Directorio de salida
        """
        if budget is not None:
            if budget < 0:
                raise ParameterError("--budget debe ser >= 0", {"variable": "budget"})
            self.BUDGET = budget
        if jobs is not None:
            if jobs < 1:
                raise ParameterError("--jobs debe ser >= 1", {"variable": "jobs"})
            self.JOBS = jobs
        if seed is not None:
            self.SEED = seed
        if output_dir is not None:
            self.OUTPUT_DIR = output_dir


# Configuración global
config = CritlabConfig()
