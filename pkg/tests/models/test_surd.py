"""Testes para a aritmética exata em Q(sqrt(D))."""
import random
from fractions import Fraction

import pytest
from pytest_check import check

from src.models.surd import Surd, arith, floor, galois_conjugate, sign
from src.utils.errors import DivisionByZeroError, MismatchedRadicandError, ParseError


def _random_surd(rng, D=5):
    return Surd(Fraction(rng.randint(-20, 20), rng.randint(1, 9)),
                Fraction(rng.randint(-20, 20), rng.randint(1, 9)), D)


def test_golden_square(phi):
    """Testa φ·φ = (3 + sqrt 5)/2."""
    assert phi * phi == (Surd.sqrt(5) + 3) / 2


def test_golden_inverse(phi):
    """Testa φ^-1 = (-1 + sqrt 5)/2."""
    with check:
        assert phi.inverse() == (Surd.sqrt(5) - 1) / 2
    with check:
        assert 1 / phi == phi - 1
    with check:
        assert phi + 0 == phi


def test_sign():
    """Testa o sinal exato."""
    root5 = Surd.sqrt(5)
    with check:
        assert sign(2 - root5) == -1
    with check:
        assert sign(Surd.rational(0, 5)) == 0
    with check:
        assert sign((root5 + 1) / 2) == 1
    with check:
        assert sign(Surd(Fraction(-3), Fraction(1), 8)) == -1


def test_floor():
    """Testa a parte inteira sem ponto flutuante."""
    with check:
        assert floor((Surd.sqrt(5) + 1) / 2) == 1
    with check:
        assert floor(-Surd.sqrt(2)) == -2
    with check:
        assert floor(Surd.rational(Fraction(7, 2), 5)) == 3
    with check:
        assert (-Surd.sqrt(2)).ceil() == -1


def test_galois_conjugate(phi):
    """Testa o conjugado de Galois."""
    assert galois_conjugate(phi) == (1 - Surd.sqrt(5)) / 2
    assert galois_conjugate(Surd.rational(3, 5)) == 3


def test_conjugate_is_multiplicative():
    """Testa conj(x·y) = conj(x)·conj(y) em amostras aleatórias."""
    rng = random.Random(7)
    for _ in range(200):
        x, y = _random_surd(rng), _random_surd(rng)
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()


def test_field_laws():
    """Testa associatividade, distributividade e inversos."""
    rng = random.Random(11)
    for _ in range(200):
        x, y, z = (_random_surd(rng, 13) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        if x:
            assert x * x.inverse() == 1


def test_order_matches_float():
    """Testa que a comparação exata concorda com a aproximação."""
    rng = random.Random(3)
    for _ in range(200):
        x, y = _random_surd(rng, 2), _random_surd(rng, 2)
        if x != y:
            assert (x < y) == (float(x) < float(y))


def test_division_by_zero():
    """Testa erro na divisão por zero."""
    with pytest.raises(DivisionByZeroError):
        Surd.sqrt(5) / Surd.rational(0, 5)
    with pytest.raises(ZeroDivisionError):
        Surd.rational(0, 3).inverse()


def test_mismatched_radicand():
    """Testa rejeição de radicandos diferentes."""
    with pytest.raises(MismatchedRadicandError):
        Surd.sqrt(5) + Surd.sqrt(2)
    with pytest.raises(MismatchedRadicandError):
        arith(Surd.sqrt(5), Surd.sqrt(3), 'mul')


def test_invalid_radicand():
    """Testa radicando quadrado perfeito."""
    with pytest.raises(ValueError):
        Surd(Fraction(1), Fraction(1), 4)


def test_text_round_trip(phi):
    """Testa a forma textual canônica."""
    assert phi.to_text() == "1/2 + 1/2*sqrt(5)"
    assert Surd.parse(phi.to_text()) == phi
    assert Surd.parse("-3/1 - 2/1*sqrt(7)") == Surd(Fraction(-3), Fraction(-2), 7)
    with pytest.raises(ParseError):
        Surd.parse("1 + sqrt 5")


def test_to_radicand():
    """Testa a reexpressão sobre outro radicando."""
    x = Surd.sqrt(12)
    y = x.to_radicand(3)
    assert y == 2 * Surd.sqrt(3)
    with pytest.raises(MismatchedRadicandError):
        Surd.sqrt(5).to_radicand(3)


def test_norm_and_trace(phi):
    """Testa norma e traço."""
    assert phi.norm() == -1
    assert phi.trace() == 1
