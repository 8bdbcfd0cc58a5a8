import os
import sys
from itertools import combinations

# Sin archivo de log durante las pruebas (debe fijarse antes de importar utils)
os.environ["CRITLAB_LOG_DIR"] = ""

# Agregar el directorio raíz al path para importaciones
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest
from hypothesis import strategies as st

from utils.config import config
from utils.constructions import complete, odd_cycle, petersen, toft, wheel
from utils.graph import Graph


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch, tmp_path):
    """Cada prueba parte de la configuración por defecto y escribe en tmp_path"""
    for name in ("CRITLAB_BUDGET", "CRITLAB_JOBS", "CRITLAB_SEED"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("CRITLAB_OUTPUT_DIR", str(tmp_path / "output"))
    config.reload()
    yield
    monkeypatch.undo()
    config.reload()


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def c5():
    return odd_cycle(5)


@pytest.fixture
def wheel5():
    return wheel(5)


@pytest.fixture
def toft3():
    return toft(3)


@pytest.fixture
def toft5():
    return toft(5)


@pytest.fixture
def petersen_graph():
    return petersen()


def random_graph(rng, n: int, p: float = 0.5) -> Graph:
    """G(n, p) con un generador random.Random dado"""
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7):
    """Estrategia de hypothesis: grafos arbitrarios sobre min_n..max_n vértices"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    present = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [pair for pair, keep in zip(pairs, present) if keep])
