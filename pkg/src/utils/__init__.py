"""Pacote de utilitários da aplicação."""
from .config import Config
from .errors import ToruxError
from .logger import Logger

__all__ = [
    'Config',
    'Logger',
    'ToruxError',
]
