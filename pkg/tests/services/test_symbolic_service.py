"""Testes para o serviço de dinâmica simbólica."""
import math
from fractions import Fraction

import pytest
from pytest_check import check

from src.models.partition import Edge, TransitionGraph
from src.models.surd import Surd
from src.models.symbolic import Cylinder, MarkovSubset, MeasureSpec, SymbolSequence
from src.services.symbolic_service import (
    arc_F_N,
    check_arc_nesting,
    check_doubling_conjugacy,
    check_shift_invariance,
    characteristic_vanishes,
    cylinder_measure,
    doubling_code,
    doubling_decode,
    doubling_orbit,
    entropy,
    largest_component_entropy,
    markov_cylinder_measure,
    markov_from_graph,
    markov_measure,
    matrix_entropy,
    perron_root,
    rho,
    rho_window,
    shift_preimage,
    strongly_connected_components,
)
from src.utils.errors import InvalidGraphError, OutOfRangeError

FIBONACCI = MarkovSubset(((1, 1), (1, 0)))


def test_doubling_code_periodic():
    """Testa o código de 1/3 = 0101..."""
    result = doubling_code(Fraction(1, 3))
    assert result.sequence == SymbolSequence((), (0, 1))
    assert not result.ambiguous
    assert result.alternate is None
    assert doubling_decode(result.sequence) == Fraction(1, 3)


def test_doubling_code_dyadic():
    """Testa os dois códigos de 1/2 e de 0."""
    half = doubling_code(Fraction(1, 2))
    with check:
        assert half.ambiguous
    with check:
        assert half.sequence == SymbolSequence((1,), (0,))
    with check:
        assert half.alternate == SymbolSequence((0,), (1,))
    with check:
        assert doubling_decode(half.alternate) == Fraction(1, 2)
    zero = doubling_code(Fraction(0))
    with check:
        assert zero.ambiguous and zero.alternate == SymbolSequence((), (1,))
    with check:
        assert doubling_decode(zero.alternate) == 0


def test_doubling_out_of_range():
    """Testa x fora de [0, 1)."""
    with pytest.raises(OutOfRangeError):
        doubling_code(Fraction(1))
    with pytest.raises(OutOfRangeError):
        doubling_orbit(Fraction(-1, 3), 3)


def test_doubling_orbit_and_conjugacy():
    """Testa a órbita e π∘σ = f∘π."""
    assert doubling_orbit(Fraction(1, 3), 4) == [Fraction(1, 3), Fraction(2, 3)] * 2
    for x in (Fraction(1, 3), Fraction(3, 7), Fraction(5, 12), Fraction(1, 2), Fraction(0)):
        assert check_doubling_conjugacy(x)


def test_arcs():
    """Testa os arcos F_N e seu encaixe."""
    assert arc_F_N(()) == (Fraction(0), Fraction(1))
    assert arc_F_N((0,)) == (Fraction(0), Fraction(1, 2))
    assert arc_F_N((1, 0, 1)) == (Fraction(5, 8), Fraction(3, 4))
    assert check_arc_nesting((1, 0, 1, 1, 0))
    x = Fraction(3, 7)
    lo, hi = arc_F_N(doubling_code(x).sequence.prefix(6))
    assert lo <= x <= hi


def test_rho():
    """Testa a métrica ρ."""
    zeros = SymbolSequence((), (0,))
    with check:
        assert rho(zeros, zeros) == 0
    with check:
        assert rho(zeros, SymbolSequence((1,), (0,))) == Fraction(1, 2)
    with check:
        assert rho(zeros, SymbolSequence((), (1,))) == 1
    with check:
        assert rho_window((0, 1, 1), (0, 0, 1)) == Fraction(1, 4)
    with pytest.raises(ValueError):
        rho_window((0,), (0, 1))


def test_bernoulli_cylinders():
    """Testa medidas de Bernoulli de cilindros e a invariância por σ."""
    fair = MeasureSpec.fair()
    biased = MeasureSpec((Fraction(1, 3), Fraction(2, 3)))
    with check:
        assert cylinder_measure(Cylinder(((0, 0), (1, 1), (2, 0))), fair) == Fraction(1, 8)
    with check:
        assert cylinder_measure(Cylinder(((0, 0), (1, 0), (2, 1))), biased) == Fraction(2, 27)
    with check:
        assert cylinder_measure(Cylinder(), biased) == 1
    cylinder = Cylinder(((0, 0), (1, 1)))
    assert shift_preimage(cylinder) == Cylinder(((1, 0), (2, 1)))
    assert check_shift_invariance(Cylinder(((0, 1), (4, 0))), biased)


def test_markov_measure():
    """Testa o vetor estacionário e cilindros com lacunas."""
    measure = markov_measure(FIBONACCI)
    assert measure.stationary == (Fraction(2, 3), Fraction(1, 3))
    assert markov_cylinder_measure(Cylinder(((0, 0), (1, 1))), measure) == Fraction(1, 3)
    assert markov_cylinder_measure(Cylinder(((0, 1), (2, 1))), measure) == Fraction(1, 6)
    assert markov_cylinder_measure(Cylinder(((0, 1), (1, 1))), measure) == 0
    assert markov_cylinder_measure(Cylinder(), measure) == 1


def test_markov_measure_errors():
    """Testa P com peso em par proibido e P não estocástica."""
    half = Fraction(1, 2)
    with pytest.raises(InvalidGraphError):
        markov_measure(FIBONACCI, [[half, half], [half, half]])
    with pytest.raises(InvalidGraphError):
        markov_measure(FIBONACCI, [[half, half], [half, 0]])


def test_markov_from_graph():
    """Testa o shift de arestas de um grafo de dois vértices."""
    graph = TransitionGraph(2, [Edge(0, 0, (0, 0)), Edge(0, 1, (0, 0)), Edge(1, 0, (1, 0))])
    subset = markov_from_graph(graph)
    assert subset.to_lists() == [[1, 1, 0], [0, 0, 1], [1, 1, 0]]
    with pytest.raises(InvalidGraphError):
        markov_from_graph(TransitionGraph(2, []))
    with pytest.raises(InvalidGraphError):
        markov_from_graph(TransitionGraph(1, [Edge(0, 3, (0, 0))]))


def test_fibonacci_entropy():
    """Testa o certificado para a matriz de Fibonacci."""
    phi = (Surd.sqrt(5) + 1) / 2
    assert characteristic_vanishes(FIBONACCI, phi)
    assert not characteristic_vanishes(FIBONACCI, phi + 1)
    assert perron_root([[1, 1], [1, 0]]) == pytest.approx(float(phi), abs=1e-9)
    certificate = entropy(FIBONACCI, phi)
    assert certificate.certified
    assert certificate.ln == pytest.approx(math.log(float(phi)))


def test_disconnected_components():
    """Testa componentes e a entropia da maior componente."""
    M = [[1, 1, 0], [1, 0, 0], [0, 0, 2]]
    assert strongly_connected_components(M) == [(0, 1), (2,)]
    assert largest_component_entropy(MarkovSubset(tuple(map(tuple, M)))) == pytest.approx(math.log(2))


@pytest.mark.slow
def test_golden_matrix_entropy(golden):
    """Testa log λ do gato pela strMp refinada."""
    certificate, sizes = matrix_entropy(golden)
    with check:
        assert certificate.determinant_vanishes
    with check:
        assert certificate.ln == pytest.approx(0.9624, abs=1e-4)
    with check:
        assert certificate.log2 == pytest.approx(1.3885, abs=1e-4)
    with check:
        assert certificate.certified
    with check:
        assert sizes['premp_pieces'] == 2 and sizes['edges'] >= sizes['strmp_pieces']


@pytest.mark.slow
def test_matrix_3211_entropy(matrix_3211):
    """Testa o certificado de (3 2; 1 1) com λ = 2 + sqrt 3."""
    certificate, sizes = matrix_entropy(matrix_3211)
    lam = Surd.sqrt(12) / 2 + 2
    with check:
        assert certificate.lam == lam
    with check:
        assert certificate.determinant_vanishes
    with check:
        assert certificate.perron_float == pytest.approx(float(lam), abs=1e-9)
    with check:
        assert certificate.certified
    with check:
        assert certificate.ln == pytest.approx(math.log(2 + math.sqrt(3)))
    with check:
        assert sizes['strmp_pieces'] == 7 and sizes['edges'] == 26
