"""Testes para a renderização SVG."""
import pytest

from src.services.render_service import (
    RenderSpec,
    lifted_polygons,
    render_partition_svg,
    render_strip_svg,
    write_svg,
)


@pytest.fixture
def spec(config):
    return RenderSpec.from_config(config=config)


def test_spec_from_config(spec):
    """Testa dimensões e paleta vindas da configuração."""
    assert (spec.width_px, spec.height_px) == (800, 800)
    assert spec.type_color('island') == '#2b7bb9'
    assert spec.piece_color(0) == spec.piece_color(len(spec.palette['pieces']))


def test_spec_errors():
    """Testa janela vazia e dimensões inválidas."""
    with pytest.raises(ValueError):
        RenderSpec(100, 100, patch=(1, 0, 0, 1))
    with pytest.raises(ValueError):
        RenderSpec(0, 100)


def test_lifted_polygons(golden_premp):
    """Testa que cada peça aparece em algum transladado da janela."""
    found = lifted_polygons(golden_premp.geometry, (-1.5, -1.5, 1.5, 1.5))
    assert {index for index, _ in found} == {0, 1}
    assert all(len(corners) == 4 for _, corners in found)


def test_render_partition(spec, golden_premp):
    """Testa o SVG do retalho do plano."""
    svg = render_partition_svg(golden_premp.geometry, spec, title='gato')
    assert svg.startswith('<svg')
    assert '<title>gato</title>' in svg
    assert svg.count('<polygon') == len(lifted_polygons(golden_premp.geometry, spec.patch))
    assert '<circle' in svg


def test_render_strip(spec, golden_premp):
    """Testa a faixa de painéis."""
    svg = render_strip_svg([golden_premp, golden_premp], spec)
    assert svg.count('class="panel island"') == 2
    assert 'I (k=' in svg
    with pytest.raises(ValueError):
        render_strip_svg([], spec)
    with pytest.raises(ValueError):
        render_strip_svg([golden_premp] * 3, RenderSpec(30, 30))


def test_write_svg(tmp_path, spec, golden_premp):
    """Testa a gravação do arquivo."""
    path = write_svg(tmp_path / 'out' / 'p.svg', render_partition_svg(golden_premp.geometry, spec))
    assert path.exists()
    assert path.read_text(encoding='utf-8').startswith('<svg')
