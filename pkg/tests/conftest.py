import os, sys

parent_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, parent_dir)
src_dir = os.path.join(parent_dir, "src")
sys.path.insert(0, src_dir)

import pytest
from src.models.matrix import MatZ2, is_hyperbolic
from src.models.surd import Surd
from src.services.partition_service import enumerate_vertex_premps
from src.utils.config import Config

@pytest.fixture
def golden():
    """Fixture com a matriz do gato de Arnold (2 1; 1 1)."""
    return MatZ2(2, 1, 1, 1)

@pytest.fixture
def matrix_3211():
    """Fixture com (3 2; 1 1), período (1, 2)."""
    return MatZ2(3, 2, 1, 1)

@pytest.fixture
def golden_squared():
    """Fixture com (5 3; 3 2), cinco pontos fixos."""
    return MatZ2(5, 3, 3, 2)

@pytest.fixture
def phi():
    """Fixture com a razão áurea (1 + sqrt 5)/2."""
    return (Surd.sqrt(5) + 1) / 2

@pytest.fixture
def golden_premp(golden):
    """Fixture com a primeira preMp garantida da classe +e_u do gato."""
    entries = enumerate_vertex_premps(golden, sides=('+u',))
    return next(e for e in entries if e.guaranteed)

@pytest.fixture
def config():
    """Fixture que fornece uma instância de Config."""
    return Config()

@pytest.fixture
def random_hyperbolic():
    """Fixture que sorteia matrizes hiperbólicas com entradas em [-6, 6]."""
    def sample(rng, count):
        found = []
        while len(found) < count:
            a, b, c = rng.randint(-6, 6), rng.randint(-6, 6), rng.randint(-6, 6)
            for det in (1, -1):
                if a and (b * c + det) % a == 0:
                    X = MatZ2(a, b, c, (b * c + det) // a)
                    if is_hyperbolic(X):
                        found.append(X)
        return found[:count]
    return sample
