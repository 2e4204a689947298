"""Módulo de configuração da aplicação."""
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from dotenv import load_dotenv

from src.utils.logger import Logger

logger = Logger(__name__)


class Config:
    """Classe para gerenciar configurações da aplicação."""

    REQUIRED_KEYS = ['app', 'limits', 'enumeration', 'mixing', 'render']

    def __init__(self, config_path: Optional[Path] = None):
        load_dotenv()
        self.config_path = config_path or (
            Path(__file__).parent.parent.parent / 'config' / 'config.yaml'
        )
        self.config = self._load_config()
        self._apply_env_overrides()
        logger.debug(f"Configuração carregada: {self.config}")

    def _load_config(self) -> dict:
        """Carrega as configurações do arquivo yaml."""
        try:
            logger.debug(f"Tentando carregar configuração de: {self.config_path}")

            if not self.config_path.exists():
                logger.warning(f"Arquivo de configuração não encontrado em: {self.config_path}")
                return self._get_default_config()

            with open(self.config_path, 'r', encoding='utf-8') as f:
                config = yaml.safe_load(f)
                if not self._validate_config(config):
                    logger.warning("Configuração inválida, usando padrão")
                    return self._get_default_config()
                return config
        except (OSError, yaml.YAMLError) as e:
            logger.error(f"Erro ao carregar configuração: {e}")
            return self._get_default_config()

    def _validate_config(self, config: Any) -> bool:
        """Valida a estrutura da configuração."""
        if not isinstance(config, dict):
            return False

        if not all(key in config for key in self.REQUIRED_KEYS):
            return False

        if 'max_q' not in config['limits']:
            return False

        return True

    def _apply_env_overrides(self) -> None:
        """Aplica variáveis de ambiente (TORUX_MAX_Q)."""
        raw = os.getenv('TORUX_MAX_Q')
        if raw is None:
            return
        try:
            value = int(raw)
        except ValueError:
            logger.warning(f"TORUX_MAX_Q inválido ignorado: {raw!r}")
            return
        if value < 1:
            logger.warning(f"TORUX_MAX_Q deve ser positivo, ignorado: {value}")
            return
        self.config['limits']['max_q'] = value

    def _get_default_config(self) -> dict:
        """Retorna a configuração padrão."""
        return {
            'app': {
                'name': 'torux',
                'description': 'Automorfismos hiperbólicos do toro em aritmética exata',
                'version': '1.0.0'
            },
            'limits': {
                'max_q': 2000,
                'cf_max_steps': 100000,
                'search_bound': 64,
                'crossing_horizon': 4096,
                'cross_check_entries': 24
            },
            'enumeration': {
                'window_periods': 2
            },
            'mixing': {
                'grid': 512,
                'iters': 3,
                'y_rect': [0.1, 0.1, 0.7, 0.7]
            },
            'render': {
                'width_px': 800,
                'height_px': 800,
                'palette': {
                    'island': '#2b7bb9',
                    'parquet': '#e08a1e',
                    'pieces': ['#4c9f70', '#d1495b', '#edae49', '#00798c', '#30638e', '#8e6c8a']
                }
            }
        }

    def get_section(self, section: str) -> Dict[str, Any]:
        """Retorna uma seção da configuração."""
        return self.config.get(section, self._get_default_config().get(section, {}))

    def get_limit(self, name: str) -> int:
        """Retorna um limite numérico."""
        limits = self.get_section('limits')
        if name in limits:
            return int(limits[name])
        return int(self._get_default_config()['limits'][name])

    @property
    def max_q(self) -> int:
        """Limite de denominadores para buscas por força bruta."""
        return self.get_limit('max_q')

    def get_palette(self) -> Dict[str, Any]:
        """Retorna a paleta de cores."""
        return self.get_section('render').get('palette', {})

    def get_y_rect(self) -> List[float]:
        """Retorna o retângulo Y da demonstração de mistura."""
        return list(self.get_section('mixing').get('y_rect', [0.1, 0.1, 0.7, 0.7]))
