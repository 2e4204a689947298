"""Testes para a demonstração de mistura."""
from fractions import Fraction

import numpy as np
import pytest
from pytest_check import check

from src.models.matrix import MatZ2
from src.services.mixing_service import (
    MIXING_TOLERANCE,
    MixingResult,
    cat_mask,
    iterate_mask,
    measure_mixing,
    rect_mask,
    render_frames,
)
from src.utils.errors import NotHyperbolicError


def test_masks():
    """Testa a silhueta e o retângulo Y."""
    mask = cat_mask(64)
    assert mask.shape == (64, 64)
    assert 0 < np.count_nonzero(mask) < 64 * 64
    assert np.count_nonzero(rect_mask(10, (0, 0, 0.5, 0.5))) == 25
    with pytest.raises(ValueError):
        rect_mask(10, (0.5, 0, 0.4, 1))


def test_result_properties():
    """Testa produto e desvio."""
    result = MixingResult(grid=8, iterations=1, mes_x=Fraction(1, 4), mes_y=Fraction(1, 2), overlap=Fraction(1, 10))
    assert result.product == Fraction(1, 8)
    assert result.deviation == pytest.approx(0.05)
    assert result.mixed


def test_golden_mixes(golden):
    """Testa mes(Â^n X ∩ Y) ≈ mes(X)·mes(Y) após três iterações."""
    result = measure_mixing(golden, grid=256, iterations=3)
    with check:
        assert result.mes_y == Fraction(9, 25)
    with check:
        assert result.mes_x.denominator <= 256 * 256
    with check:
        assert result.deviation <= MIXING_TOLERANCE
    with check:
        assert result.mixed


def test_not_hyperbolic():
    """Testa matriz parabólica."""
    with pytest.raises(NotHyperbolicError):
        iterate_mask(MatZ2(1, 1, 0, 1), cat_mask(8), 1)


def test_small_grid(golden):
    """Testa grade pequena demais."""
    with pytest.raises(ValueError):
        measure_mixing(golden, grid=1, iterations=1)


def test_render_frames(golden, tmp_path):
    """Testa a gravação dos quadros PNG."""
    paths = render_frames(golden, tmp_path / 'frames', grid=32, iterations=2)
    assert [p.name for p in paths] == ['frame_00.png', 'frame_01.png', 'frame_02.png']
    assert all(p.exists() and p.stat().st_size > 0 for p in paths)


def test_large_entries_stay_exact(golden):
    """Testa que A^40 aplicado uma vez coincide com A aplicado 40 vezes."""
    mask = cat_mask(64)
    power = golden.power(40)
    assert abs(power.a) > 2 ** 53
    assert np.array_equal(iterate_mask(power, mask, 1), iterate_mask(golden, mask, 40))


def test_invalid_rect(golden):
    """Testa retângulo Y fora de [0, 1]^2."""
    with pytest.raises(ValueError):
        measure_mixing(golden, grid=8, iterations=1, rect=(0.5, 0, 0.4, 1))
