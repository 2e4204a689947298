"""Testes para a configuração."""
from src.utils.config import Config


def test_defaults_from_yaml(monkeypatch):
    """Testa os valores do config.yaml."""
    monkeypatch.delenv('TORUX_MAX_Q', raising=False)
    config = Config()
    assert config.max_q == 2000
    assert config.get_limit('search_bound') == 64
    assert config.get_y_rect() == [0.1, 0.1, 0.7, 0.7]
    assert config.get_palette()['parquet'] == '#e08a1e'


def test_env_override(monkeypatch):
    """Testa TORUX_MAX_Q."""
    monkeypatch.setenv('TORUX_MAX_Q', '50')
    assert Config().max_q == 50


def test_invalid_env_ignored(monkeypatch):
    """Testa TORUX_MAX_Q inválido ou não positivo."""
    monkeypatch.setenv('TORUX_MAX_Q', 'muito')
    assert Config().max_q == 2000
    monkeypatch.setenv('TORUX_MAX_Q', '0')
    assert Config().max_q == 2000


def test_missing_file(tmp_path, monkeypatch):
    """Testa arquivo ausente e arquivo inválido."""
    monkeypatch.delenv('TORUX_MAX_Q', raising=False)
    assert Config(tmp_path / 'nao_existe.yaml').get_section('mixing')['grid'] == 512
    broken = tmp_path / 'broken.yaml'
    broken.write_text('app: {}\n', encoding='utf-8')
    assert Config(broken).max_q == 2000


def test_unknown_limit_falls_back(tmp_path, monkeypatch):
    """Testa limite ausente no arquivo."""
    monkeypatch.delenv('TORUX_MAX_Q', raising=False)
    custom = tmp_path / 'custom.yaml'
    custom.write_text(
        'app: {name: x}\nlimits: {max_q: 7}\nenumeration: {}\nmixing: {}\nrender: {}\n',
        encoding='utf-8',
    )
    config = Config(custom)
    assert config.max_q == 7
    assert config.get_limit('crossing_horizon') == 4096
    assert config.get_y_rect() == [0.1, 0.1, 0.7, 0.7]
