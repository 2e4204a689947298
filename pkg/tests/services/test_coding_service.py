"""Testes para a codificação de pontos do toro por uma strMp."""
from fractions import Fraction

import pytest
from pytest_check import check

from src.models.partition import Edge, TransitionGraph
from src.services.coding_service import (
    check_shift_equivariance,
    closure_codes,
    cylinder_pieces,
    decode,
    encode_point,
    naive_codes,
    torus_contains,
    torus_point,
    window_shifts,
    window_u_diameter_bound,
)
from src.services.partition_service import markov_dynamics
from src.services.refinement_service import refine, transition_graph
from src.utils.errors import InvalidGraphError

POINT = (Fraction(1, 7), Fraction(2, 5))


@pytest.fixture
def strmp(golden, golden_premp):
    """strMp do gato obtida do refinamento da primeira preMp."""
    return refine(golden_premp.geometry, markov_dynamics(golden))


def test_generic_point_single_code(golden, strmp):
    """Testa que um ponto fora das fronteiras tem um único código."""
    words = encode_point(POINT, strmp, golden, 2)
    assert len(words) == 1
    assert len(words[0]) == 5
    point = torus_point(strmp, POINT)
    with check:
        assert len(cylinder_pieces(point, strmp, golden, -2, 2)) == 1
    with check:
        assert naive_codes(point, strmp, golden, -2, 2) == set(words)


def test_decode_contains_point(golden, strmp):
    """Testa que o retângulo decodificado contém o ponto e encolhe com N."""
    N = 2
    word = encode_point(POINT, strmp, golden, N)[0]
    region = decode(word, strmp, golden)
    assert region is not None
    with check:
        assert torus_contains(strmp.frame, region, torus_point(strmp, POINT))
    with check:
        assert region.u_len <= window_u_diameter_bound(strmp, golden, N)


def test_shift_equivariance(golden, strmp):
    """Testa π∘σ = Â∘π numa janela."""
    assert check_shift_equivariance(POINT, strmp, golden, 2)
    assert check_shift_equivariance((Fraction(3, 11), Fraction(5, 9)), strmp, golden, 1)


def test_window_shifts(golden, strmp):
    """Testa as translações da janela a partir das arestas de Γ."""
    dynamics = markov_dynamics(golden)
    graph = transition_graph(strmp, dynamics)
    word = encode_point(POINT, strmp, golden, 1)[0]
    shifts = window_shifts(word, 1, graph, dynamics)
    assert shifts[1] == (0, 0)
    assert len(shifts) == 3
    with pytest.raises(ValueError):
        window_shifts(word, 5, graph, dynamics)


def test_forbidden_pair(golden):
    """Testa palavra com par sem aresta em Γ."""
    graph = TransitionGraph(2, [Edge(0, 0, (0, 0)), Edge(1, 0, (1, 0))])
    with pytest.raises(InvalidGraphError):
        window_shifts((0, 1), 0, graph, golden)


def test_closure_window(golden, strmp):
    """Testa janela vazia."""
    with pytest.raises(ValueError):
        closure_codes(torus_point(strmp, POINT), strmp, golden, 1, 0)
