"""Testes para os modelos de dinâmica simbólica."""
from fractions import Fraction

import pytest
from pytest_check import check

from src.models.surd import Surd
from src.models.symbolic import (
    Cylinder,
    EntropyCertificate,
    MarkovSubset,
    MeasureSpec,
    SymbolSequence,
)
from src.utils.errors import InvalidGraphError


def test_canonical_sequence():
    """Testa período primitivo e pré-período mínimo."""
    with check:
        assert SymbolSequence.canonical((0, 1), (0, 1)) == SymbolSequence((), (0, 1))
    with check:
        assert SymbolSequence.canonical((), (0, 0)) == SymbolSequence((), (0,))
    with check:
        assert SymbolSequence.canonical((1, 0), (0,)) == SymbolSequence((1,), (0,))


def test_symbols_and_shift():
    """Testa acesso aos símbolos e o shift σ."""
    x = SymbolSequence((1,), (0, 1))
    assert x.prefix(6) == (1, 0, 1, 0, 1, 0)
    assert x.symbol(5) == 0
    assert x.shift() == SymbolSequence((), (0, 1))
    assert x.shift().shift() == SymbolSequence((), (1, 0))
    with pytest.raises(IndexError):
        x.symbol(-1)


def test_sequence_errors():
    """Testa período vazio e símbolo fora do alfabeto."""
    with pytest.raises(ValueError):
        SymbolSequence((0,), ())
    with pytest.raises(ValueError):
        SymbolSequence((), (2,))
    assert SymbolSequence((), (2,), alphabet_size=3).to_dict() == {'preperiod': [], 'period': [2]}


def test_cylinder():
    """Testa normalização e pertinência de cilindros."""
    cylinder = Cylinder(((2, 1), (0, 1)))
    assert cylinder.constraints == ((0, 1), (2, 1))
    assert len(cylinder) == 2
    assert cylinder.contains(SymbolSequence((), (1,)))
    assert not cylinder.contains(SymbolSequence((), (1, 0, 0)))
    with pytest.raises(ValueError):
        Cylinder(((0, 1), (0, 0)))
    with pytest.raises(ValueError):
        Cylinder(((-1, 0),))


def test_measure_spec():
    """Testa medidas de Bernoulli."""
    assert MeasureSpec.fair(3).probabilities == (Fraction(1, 3),) * 3
    assert MeasureSpec((Fraction(1, 4), Fraction(3, 4))).alphabet_size == 2
    with pytest.raises(ValueError):
        MeasureSpec((Fraction(1, 2), Fraction(1, 3)))
    with pytest.raises(ValueError):
        MeasureSpec((Fraction(3, 2), Fraction(-1, 2)))


def test_markov_subset():
    """Testa a matriz de admissibilidade."""
    subset = MarkovSubset(((1, 1), (1, 0)))
    assert subset.alphabet_size == 2
    assert subset.is_admissible([0, 1, 0, 0])
    assert not subset.is_admissible([1, 1])
    assert subset.to_lists() == [[1, 1], [1, 0]]
    with pytest.raises(InvalidGraphError):
        MarkovSubset(((1, 1),))
    with pytest.raises(InvalidGraphError):
        MarkovSubset(())


def test_entropy_certificate_flags():
    """Testa os critérios do certificado."""
    phi = (Surd.sqrt(5) + 1) / 2
    good = EntropyCertificate(phi, 2, True, float(phi), 0.48, 0.69)
    assert good.agrees and good.certified
    off = EntropyCertificate(phi, 2, True, float(phi) + 1e-6, 0.48, 0.69)
    assert not off.agrees and not off.certified
    assert not EntropyCertificate(phi, 2, False, float(phi), 0.48, 0.69).certified
