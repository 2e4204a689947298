"""Testes para o contraexemplo à codificação ingênua."""
from fractions import Fraction

import pytest
from pytest_check import check

from src.models.matrix import MatZ2
from src.models.partition import PlanarParallelogram
from src.models.surd import coerce
from src.services.counterexample_service import (
    CounterexampleFixture,
    build_counterexample,
    fixture_pieces,
    origin_codings,
    torus_overlap,
    torus_touch,
)
from src.services.lattice_service import matrix_frame
from src.services.validator_service import piece_is_injective
from src.utils.errors import NotHyperbolicError


def _square(u, s, side):
    u, s, side = (coerce(Fraction(v), 5) for v in (u, s, side))
    return PlanarParallelogram(u, u + side, s, s + side)


def test_touch_and_overlap(golden):
    """Testa contato dos fechos contra interseção dos interiores."""
    _, frame = matrix_frame(golden)
    a = _square(0, 0, Fraction(1, 10))
    b = a.translated(Fraction(1, 10), 0)
    with check:
        assert torus_touch(frame, a, b)
    with check:
        assert not torus_overlap(frame, a, b)
    with check:
        assert torus_overlap(frame, a, a.translated(Fraction(1, 20), 0))
    with check:
        assert not torus_touch(frame, a, a.translated(Fraction(1, 5), 0))


def test_origin_codings_inclusion(golden, golden_premp):
    """Testa que a regra do fecho dá um subconjunto dos códigos ingênuos."""
    piece = golden_premp.geometry.pieces[0]
    fixture = CounterexampleFixture(golden, golden_premp.geometry, 0, piece, piece, piece, {})
    codes = origin_codings(fixture)
    assert codes['closure']
    assert codes['closure'] <= codes['naive']
    assert all(len(word) == 3 for word in codes['naive'])


def test_counterexample_errors():
    """Testa matriz não hiperbólica e autovalores negativos."""
    with pytest.raises(NotHyperbolicError):
        build_counterexample(MatZ2(1, 1, 0, 1))
    with pytest.raises(ValueError):
        build_counterexample(MatZ2(-2, -1, -1, -1))


@pytest.mark.slow
def test_counterexample_golden():
    """Testa Π₁, Π₂, Π₃ para o gato e a falha da codificação ingênua."""
    fixture = build_counterexample()
    assert fixture.holds
    _, frame = matrix_frame(fixture.A)
    for piece in fixture_pieces(fixture):
        with check:
            assert piece_is_injective(frame, piece)
    codes = origin_codings(fixture)
    with check:
        assert codes['closure'] < codes['naive']
